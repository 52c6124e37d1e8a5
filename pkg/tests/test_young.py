import math

import pytest
from hypothesis import given, strategies as st

from rsmarginals.numbers import ballot, multiset
from rsmarginals.young import (
    NotAPartitionError,
    ShapeParseError,
    StandardTableau,
    as_partition,
    box_partitions_by_size,
    concat_shape,
    conjugate,
    enumerate_syt,
    f_rect,
    f_syt,
    format_partition,
    parse_partition,
    partitions_in_box,
    restrict,
)


@st.composite
def partitions(draw, max_part=9, max_len=6):
    length = draw(st.integers(1, max_len))
    parts = []
    cap = max_part
    for _ in range(length):
        p = draw(st.integers(1, cap))
        parts.append(p)
        cap = p
    return tuple(parts)


class TestPartitionBasics:
    def test_as_partition_strips_zeros(self):
        assert as_partition((3, 2, 0, 0)) == (3, 2)
        assert as_partition(()) == ()
        assert as_partition((5,)) == (5,)

    def test_as_partition_rejects_increase(self):
        with pytest.raises(NotAPartitionError):
            as_partition((1, 2))
        with pytest.raises(NotAPartitionError):
            as_partition((3, -1))

    def test_parse(self):
        assert parse_partition("9,1^6") == (9, 1, 1, 1, 1, 1, 1)
        assert parse_partition("5^4") == (5, 5, 5, 5)
        assert parse_partition(" 4 , 3 ") == (4, 3)
        assert parse_partition("7") == (7,)

    def test_parse_errors(self):
        with pytest.raises(ShapeParseError):
            parse_partition("")
        with pytest.raises(ShapeParseError):
            parse_partition("3^^2")
        with pytest.raises(ShapeParseError):
            parse_partition("a,b")
        with pytest.raises(ShapeParseError):
            parse_partition("0,1")
        with pytest.raises(NotAPartitionError):
            parse_partition("1,2")

    @given(partitions())
    def test_format_parse_roundtrip(self, parts):
        assert parse_partition(format_partition(parts)) == parts

    @given(partitions())
    def test_conjugate_involution(self, parts):
        assert conjugate(conjugate(parts)) == parts
        assert sum(conjugate(parts)) == sum(parts)

    def test_conjugate_examples(self):
        assert conjugate((3, 1)) == (2, 1, 1)
        assert conjugate((2, 2)) == (2, 2)
        assert conjugate(()) == ()


class TestCounting:
    def test_f_syt_small(self):
        assert f_syt(()) == 1
        assert f_syt((1,)) == 1
        assert f_syt((2, 1)) == 2
        assert f_syt((3, 3, 3)) == 42
        assert f_syt((2, 2, 1)) == 5

    @given(partitions(max_part=5, max_len=4))
    def test_f_syt_conjugation_invariant(self, parts):
        assert f_syt(parts) == f_syt(conjugate(parts))

    def test_f_syt_matches_enumeration(self):
        for parts in [(3,), (2, 2), (3, 1), (4, 2), (3, 2, 1), (2, 2, 2, 1)]:
            assert f_syt(parts) == len(enumerate_syt(parts))

    def test_hook_and_tworow_specializations(self):
        for a in range(1, 7):
            for b in range(0, 6):
                assert f_syt((a,) + (1,) * b) == multiset(a, b)
                if a >= b:
                    shape = (a, b) if b else (a,)
                    assert f_syt(shape) == ballot(a, b)

    def test_f_rect(self):
        assert f_rect(3, 3) == 42
        assert f_rect(5, 4) == f_syt((5, 5, 5, 5))
        assert f_rect(1, 7) == 1
        with pytest.raises(ValueError):
            f_rect(0, 3)


class TestStandardTableau:
    def test_valid(self):
        t = StandardTableau([[1, 2, 4], [3, 7], [5], [6]])
        assert t.shape() == (3, 2, 1, 1)
        assert t.n == 7
        assert t.entry(2, 2) == 7

    def test_invalid_rows(self):
        with pytest.raises(ValueError):
            StandardTableau([[2, 1], [3]])
        with pytest.raises(ValueError):
            StandardTableau([[1, 3], [2, 2]])
        with pytest.raises(ValueError):
            StandardTableau([[1, 4], [2, 3], [5, 6, 7]])
        with pytest.raises(ValueError):
            StandardTableau([[1, 2], [3, 5]])  # missing 4

    def test_column_strictness(self):
        with pytest.raises(ValueError):
            StandardTableau([[1, 2], [4, 3]])

    def test_equality_and_hash(self):
        a = StandardTableau([[1, 2], [3]])
        b = StandardTableau([[1, 2], [3]])
        c = StandardTableau([[1, 3], [2]])
        assert a == b and hash(a) == hash(b)
        assert a != c


class TestEnumerateSyt:
    def test_all_valid_and_distinct(self):
        for parts in [(4, 2), (3, 2, 1), (2, 2, 2)]:
            tabs = enumerate_syt(parts)
            assert len(set(tabs)) == len(tabs) == f_syt(parts)
            for t in tabs:
                t._check()
                assert t.shape() == parts

    def test_guard(self):
        with pytest.raises(ValueError):
            enumerate_syt((15,))


class TestRestrict:
    def test_le_lt(self):
        t = StandardTableau([[1, 2, 4], [3, 7], [5], [6]])
        assert restrict(t, 4, "le").rows == ((1, 2, 4), (3,))
        assert restrict(t, 4, "lt").rows == ((1, 2), (3,))

    def test_gt_ge_cells(self):
        t = StandardTableau([[1, 2, 4], [3, 7], [5], [6]])
        assert restrict(t, 5, "ge") == [(2, 2, 7), (3, 1, 5), (4, 1, 6)]
        assert restrict(t, 5, "gt") == [(2, 2, 7), (4, 1, 6)]

    def test_bad_mode(self):
        with pytest.raises(ValueError):
            restrict(StandardTableau([[1]]), 1, "eq")


class TestBoxPartitions:
    def test_fixed_length_with_zeros(self):
        got = list(partitions_in_box(2, 2, 2))
        assert got == [(2, 0), (1, 1)]
        assert list(partitions_in_box(0, 5, 0)) == [()]
        assert list(partitions_in_box(0, 5, 1)) == []

    def test_total_count_is_gaussian_binomial(self):
        # sum over sizes equals C(a+b, a)
        for a in range(5):
            for b in range(5):
                total = sum(
                    len(group) for group in box_partitions_by_size(a, b).values()
                )
                assert total == math.comb(a + b, a)

    @given(st.integers(0, 4), st.integers(0, 4), st.integers(0, 16))
    def test_members_are_valid(self, a, b, size):
        for parts in partitions_in_box(a, b, size):
            assert len(parts) == a
            assert all(0 <= p <= b for p in parts)
            assert all(x >= y for x, y in zip(parts, parts[1:]))
            assert sum(parts) == size


class TestConcatShape:
    def test_basic(self):
        assert concat_shape((4, 3), 2, (1, 0)) == (4, 3, 2, 1)
        assert concat_shape((), 0, ()) == ()
        assert concat_shape((2,), 2, (2,)) == (2, 2, 2)
