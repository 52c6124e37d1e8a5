"""Partitions, standard Young tableaux, and tableau counting.

Partitions are plain tuples of weakly decreasing positive ints (trailing
zeros stripped at construction).  Box partitions used by the rectangular
kernel keep a fixed length and retain zeros.
"""

from functools import lru_cache
from math import factorial

from .numbers import multiset

ENUMERATION_LIMIT = 14  # exhaustive SYT generation guard


class NotAPartitionError(ValueError):
    pass


class ShapeParseError(ValueError):
    pass


def as_partition(parts) -> tuple:
    """Validate and normalize: weakly decreasing, trailing zeros stripped."""
    parts = tuple(int(p) for p in parts)
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise NotAPartitionError(f"parts not weakly decreasing: {parts}")
    if parts and parts[-1] < 0:
        raise NotAPartitionError(f"negative part in {parts}")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def parse_partition(text: str) -> tuple:
    """Parse the CLI shape format: comma-separated parts with exponent shorthand.

    ``9,1^6`` means (9,1,1,1,1,1,1); ``5^4`` means (5,5,5,5).  Whitespace is
    ignored.  Raises ShapeParseError on malformed input, NotAPartitionError
    if the parts increase.
    """
    cleaned = "".join(text.split()).lower()
    if not cleaned:
        raise ShapeParseError("empty shape")
    parts = []
    for token in cleaned.split(","):
        base, sep, exp = token.partition("^")
        try:
            value = int(base)
            count = int(exp) if sep else 1
        except ValueError:
            raise ShapeParseError(f"malformed token {token!r} in {text!r}") from None
        if value <= 0 or count < 0:
            raise ShapeParseError(f"malformed token {token!r} in {text!r}")
        parts.extend([value] * count)
    return as_partition(parts)


def format_partition(parts) -> str:
    """Inverse of parse_partition, using exponent shorthand for runs."""
    if not parts:
        return "0"
    out = []
    i = 0
    while i < len(parts):
        j = i
        while j < len(parts) and parts[j] == parts[i]:
            j += 1
        run = j - i
        out.append(str(parts[i]) if run == 1 else f"{parts[i]}^{run}")
        i = j
    return ",".join(out)


def conjugate(parts) -> tuple:
    """Transpose the Young diagram."""
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1))


@lru_cache(maxsize=None)
def f_syt(parts) -> int:
    """Number of standard Young tableaux of this shape, by the hook-length formula.

    Memoized: the rectangular kernel evaluates the same small shapes many times.
    """
    parts = as_partition(parts)
    n = sum(parts)
    conj = conjugate(parts)
    denom = 1
    for i, row_len in enumerate(parts):
        for j in range(row_len):
            denom *= (row_len - j) + (conj[j] - i) - 1
    return factorial(n) // denom


def f_rect(ell: int, m: int) -> int:
    """SYT count of the ell x m rectangle: [prod_{s<m} s!/(ell+s)!] * (ell*m)!."""
    if ell < 1 or m < 1:
        raise ValueError("rectangle sides must be positive")
    num = factorial(ell * m)
    for s in range(m):
        num = num * factorial(s) // factorial(ell + s)
    return num


class StandardTableau:
    """Row- and column-strict filling of a Young diagram with 1..n."""

    def __init__(self, rows, validate: bool = True):
        self.rows = tuple(tuple(r) for r in rows)
        if validate:
            self._check()

    def _check(self):
        shape = self.shape()
        as_partition(shape)  # raises on bad row lengths
        n = sum(shape)
        entries = sorted(e for row in self.rows for e in row)
        if entries != list(range(1, n + 1)):
            raise ValueError("entries are not exactly 1..n")
        for row in self.rows:
            if any(a >= b for a, b in zip(row, row[1:])):
                raise ValueError("row not strictly increasing")
        for upper, lower in zip(self.rows, self.rows[1:]):
            if any(upper[j] >= lower[j] for j in range(len(lower))):
                raise ValueError("column not strictly increasing")

    def shape(self) -> tuple:
        return tuple(len(r) for r in self.rows)

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    def entry(self, i: int, j: int) -> int:
        """1-based entry in row i, column j."""
        return self.rows[i - 1][j - 1]

    def __eq__(self, other):
        return isinstance(other, StandardTableau) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"StandardTableau({[list(r) for r in self.rows]})"


def enumerate_syt(parts) -> list:
    """All standard Young tableaux of the given shape, by corner removal.

    Exhaustive test oracle; guarded to n <= ENUMERATION_LIMIT.
    """
    parts = as_partition(parts)
    n = sum(parts)
    if n > ENUMERATION_LIMIT:
        raise ValueError(f"enumerate_syt limited to n <= {ENUMERATION_LIMIT}, got {n}")
    results = []
    grid = [[0] * p for p in parts]
    lengths = list(parts)

    def place(entry):
        if entry == 0:
            results.append(StandardTableau([row[:] for row in grid], validate=False))
            return
        for i in range(len(lengths)):
            j = lengths[i] - 1
            if j < 0:
                continue
            # removable corner iff the row below is strictly shorter
            if i + 1 < len(lengths) and lengths[i + 1] > j:
                continue
            grid[i][j] = entry
            lengths[i] -= 1
            place(entry - 1)
            lengths[i] += 1
            grid[i][j] = 0

    place(n)
    return results


def restrict(tableau: StandardTableau, i: int, mode: str):
    """Cut a tableau at entry threshold i.

    Modes "le"/"lt" return the StandardTableau of small entries.  Modes
    "gt"/"ge" return the raw fragment as a list of (row, col, entry) cells
    (1-based); relabeling conventions live in the callers.
    """
    if mode in ("le", "lt"):
        cut = i if mode == "le" else i - 1
        rows = [[e for e in row if e <= cut] for row in tableau.rows]
        return StandardTableau([r for r in rows if r])
    if mode in ("gt", "ge"):
        cut = i if mode == "gt" else i - 1
        return [
            (r + 1, c + 1, e)
            for r, row in enumerate(tableau.rows)
            for c, e in enumerate(row)
            if e > cut
        ]
    raise ValueError(f"unknown mode {mode!r}")


def partitions_in_box(a: int, b: int, size: int):
    """Yield the partitions of `size` fitting in an a x b box, as length-a tuples.

    Trailing zeros are retained: the complement/reversal operations of the
    rectangular kernel are defined on fixed-length tuples.
    """
    if size < 0 or size > a * b:
        return

    def rec(prefix, remaining, rows_left, cap):
        if rows_left == 0:
            if remaining == 0:
                yield tuple(prefix)
            return
        lo = max(0, remaining - cap * (rows_left - 1))
        for part in range(min(cap, remaining), lo - 1, -1):
            prefix.append(part)
            yield from rec(prefix, remaining - part, rows_left - 1, part)
            prefix.pop()

    yield from rec([], size, a, b)


@lru_cache(maxsize=None)
def box_partitions_by_size(a: int, b: int) -> dict:
    """All of Par(a x b), grouped by size."""
    out = {}
    for size in range(a * b + 1):
        group = list(partitions_in_box(a, b, size))
        if group:
            out[size] = group
    return out


def concat_shape(prefix, middle: int, suffix) -> tuple:
    """Concatenate (prefix; middle; suffix) into a partition, stripping zeros.

    Weak decrease must hold by construction; a violation signals a kernel
    bug, not a user error.
    """
    parts = tuple(prefix) + (middle,) + tuple(suffix)
    for x, y in zip(parts, parts[1:]):
        assert x >= y, f"concatenation {parts} is not weakly decreasing"
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts
