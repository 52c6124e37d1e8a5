"""Closed-form position marginals for permutations of a fixed RS shape.

For hook shapes (ell, 1^(n-ell)), two-row shapes (ell, n-ell), and
rectangles (ell^m), the number of permutations sigma of that shape with
sigma(i) = j is given by explicit sums of counting numbers.  This module
evaluates those sums exactly and assembles the count matrix P-check and
the doubly stochastic probability matrix P = P-check / f_syt(shape)^2.

All sum ranges are clipped to the window where the factors are nonzero,
which is what keeps the n = 2000 trace computations fast.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .numbers import HalfInt, gen_ballot, multiset
from .young import (
    as_partition,
    box_partitions_by_size,
    concat_shape,
    conjugate,
    f_syt,
)

GENPOLY_CELL_LIMIT = 200  # refuse gen_poly_rect beyond this many cells


class UnsupportedShape(ValueError):
    """Shape is outside the hook, two-row, and rectangular families."""


@dataclass(frozen=True)
class ShapeFamily:
    kind: str  # "hook" | "two-row" | "rect"
    ell: int
    size: int  # n for hook and two-row, m (row count) for rect
    via_conjugate: bool = False


@dataclass(frozen=True)
class CountMatrix:
    n: int
    rows: tuple  # n x n nonnegative ints

    def entry(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - 1]


@dataclass(frozen=True)
class ProbMatrix:
    n: int
    rows: tuple  # n x n Fractions

    def entry(self, i: int, j: int) -> Fraction:
        return self.rows[i - 1][j - 1]

    def trace(self) -> Fraction:
        return sum(self.rows[i][i] for i in range(self.n))


@dataclass(frozen=True)
class GenPoly:
    """Sparse coefficient grid of the rectangle generating polynomial.

    coeffs[(i, j)] is the count of shape-(ell^m) permutations with
    sigma(i) = j; absent keys are zero.
    """

    ell: int
    m: int
    coeffs: dict

    def coeff(self, i: int, j: int) -> int:
        return self.coeffs.get((i, j), 0)


# ---------------------------------------------------------------------------
# hook kernel


def hook_K(ell: int, n: int, i: int, j: int) -> HalfInt:
    """Crossroads height K = (i + j + ell - n) / 2, possibly half-integral."""
    return HalfInt(i + j + ell - n)


def hook_X(ell: int, n: int, i: int, j: int) -> int:
    """Crossroads term of the hook count.

    Vanishes whenever K is a half-integer, which produces the checkerboard
    zero pattern of hook marginals.
    """
    K = hook_K(ell, n, i, j)
    if not K.is_integer():
        return 0
    k = K.as_int()
    return (
        multiset(k, i - k)
        * multiset(k, j - k)
        * multiset(ell - k + 1, n - ell + k - i)
        * multiset(ell - k + 1, n - ell + k - j)
    )


def hook_Y(ell: int, n: int, i: int, j: int) -> int:
    """Off-crossroads term: sum over integer k with 1 < k < K.

    Term k counts the pairs where entry i sits at column k of the first
    tableau row (and j likewise in the recording tableau).  The cut at
    entry i leaves a hook piece whose first row still contains the cell
    of i itself, hence arm ell - k + 1, mirroring the X term.

    The range is clipped to where all four multiset factors survive; the
    naive range evaluates mostly zeros and ruins large-n traces.
    """
    k2 = i + j + ell - n  # doubled K
    lo = max(2, i - (n - ell), j - (n - ell))
    hi = min(i, j, ell, (k2 - 1) // 2)
    total = 0
    for k in range(lo, hi + 1):
        total += (
            multiset(k - 1, i - k)
            * multiset(k - 1, j - k)
            * multiset(ell - k + 1, n - ell + k - i)
            * multiset(ell - k + 1, n - ell + k - j)
        )
    return total


def hook_entry(ell: int, n: int, i: int, j: int) -> int:
    """Count of shape-(ell, 1^(n-ell)) permutations with sigma(i) = j."""
    ib, jb, lb = n + 1 - i, n + 1 - j, n + 1 - ell
    return (
        hook_X(ell, n, i, j)
        + hook_Y(ell, n, i, j)
        + hook_Y(lb, n, i, jb)
        + hook_Y(lb, n, ib, j)
        + hook_Y(ell, n, ib, jb)
    )


# ---------------------------------------------------------------------------
# two-row kernel


def tworow_V(ell: int, n: int, i: int, j: int) -> int:
    """Single-line term of the two-row count (shape (ell, n-ell)).

    Sums over the column k of the crossing cell; clipped to the window
    where the ballot factors are nonzero.
    """
    dj = max(j - i, 0)
    di = max(i - j, 0)
    lo = max(1, i - (n - ell), j - (n - ell))
    hi = min(ell, i, j)
    total = 0
    for k in range(lo, hi + 1):
        total += (
            gen_ballot(k - 1, 0, i - k)
            * gen_ballot(k - 1, 0, j - k)
            * gen_ballot(ell - k, dj, n - ell + k - i)
            * gen_ballot(ell - k, di, n - ell + k - j)
        )
    return total


def tworow_W(ell: int, n: int, i: int, j: int) -> int:
    """Two-line term of the two-row count, in the symmetric form.

    Zero on the diagonal.  The subtracted products carry skew offsets one
    lower; a negative offset makes gen_ballot return 0, which is exactly
    the degenerate boundary count.
    """
    if i == j:
        return 0
    ilt = 1 if i < j else 0  # Iverson brackets [i < j], [i > j]
    igt = 1 - ilt
    dj = max(j - i, 0)
    di = max(i - j, 0)
    total = 0
    for p in range(1, min(ell, i) + 1):
        left = gen_ballot(p - ilt, 0, i - p - igt)
        if left == 0:
            continue
        for q in range(max(1, max(i, j) - p), min(ell, j) + 1):
            d = (p - q) * (i - j)
            if not 0 <= d < (i - j) ** 2:
                continue
            head = left * gen_ballot(q - igt, 0, j - q - ilt)
            if head == 0:
                continue
            total += head * (
                gen_ballot(ell - p, dj + p - q, n - ell + p - i)
                * gen_ballot(ell - q, di + q - p, n - ell + q - j)
                - gen_ballot(ell - p, dj + p - q - 1, n - ell + p - i)
                * gen_ballot(ell - q, di + q - p - 1, n - ell + q - j)
            )
    return total


def tworow_entry(ell: int, n: int, i: int, j: int) -> int:
    """Count of shape-(ell, n-ell) permutations with sigma(i) = j."""
    return tworow_V(ell, n, i, j) + tworow_W(ell, n, i, j)


# ---------------------------------------------------------------------------
# rectangular kernel


@lru_cache(maxsize=None)
def _rect_blocks(ell: int, m: int, r: int, k: int) -> dict:
    """Size-indexed block sums for the rectangle kernel.

    For fixed (r, k), sums over pairs (mu, nu) with mu in the
    (r-1) x (ell-k) box and nu in the (m-r) x (k-1) box, grouped by
    |mu| + |nu|.  Each pair contributes the SYT count of the truncated
    shape (k+mu; k-1; nu) times that of the complementary shape
    (ell-rev(nu); ell-k; ell-k-rev(mu)).
    """
    mus = box_partitions_by_size(r - 1, ell - k)
    nus = box_partitions_by_size(m - r, k - 1)
    out = {}
    for smu, mu_group in mus.items():
        for snu, nu_group in nus.items():
            acc = out.get(smu + snu, 0)
            for mu in mu_group:
                for nu in nu_group:
                    upper = concat_shape(tuple(k + x for x in mu), k - 1, nu)
                    lower = concat_shape(
                        tuple(ell - x for x in reversed(nu)),
                        ell - k,
                        tuple(ell - k - x for x in reversed(mu)),
                    )
                    acc += f_syt(upper) * f_syt(lower)
            out[smu + snu] = acc
    return out


def rect_Z(ell: int, m: int, i: int, j: int) -> int:
    """Count of shape-(ell^m) permutations with sigma(i) = j.

    Entry i of the left factor fixes a block of excess i - k*r over the
    truncated staircase; the right factor is the same block family at row
    m + 1 - r.
    """
    total = 0
    for r in range(1, m + 1):
        for k in range(1, ell + 1):
            left = _rect_blocks(ell, m, r, k).get(i - k * r)
            if not left:
                continue
            right = _rect_blocks(ell, m, m + 1 - r, k).get(j - k * (m + 1 - r))
            if right:
                total += left * right
    return total


def rect_entry(ell: int, m: int, i: int, j: int) -> int:
    return rect_Z(ell, m, i, j)


def gen_poly_rect(ell: int, m: int) -> GenPoly:
    """Full coefficient grid of the rectangle generating polynomial.

    One pass over the (r, k) blocks; coefficient (i, j) multiplies
    x^i y^j and equals rect_Z(ell, m, i, j).
    """
    if ell * m > GENPOLY_CELL_LIMIT:
        raise ValueError(f"rectangle has {ell * m} cells, limit {GENPOLY_CELL_LIMIT}")
    coeffs = {}
    for r in range(1, m + 1):
        for k in range(1, ell + 1):
            left = _rect_blocks(ell, m, r, k)
            right = _rect_blocks(ell, m, m + 1 - r, k)
            for si, lv in left.items():
                i = si + k * r
                for sj, rv in right.items():
                    j = sj + k * (m + 1 - r)
                    if lv and rv:
                        key = (i, j)
                        coeffs[key] = coeffs.get(key, 0) + lv * rv
    return GenPoly(ell, m, coeffs)


# ---------------------------------------------------------------------------
# classification and matrix assembly


def _direct_families(parts) -> list:
    n = sum(parts)
    out = []
    if parts and all(p == 1 for p in parts[1:]):
        out.append(ShapeFamily("hook", parts[0], n))
    if 1 <= len(parts) <= 2:
        out.append(ShapeFamily("two-row", parts[0], n))
    if parts and len(set(parts)) == 1:
        out.append(ShapeFamily("rect", parts[0], len(parts)))
    return out


def classify(parts) -> set:
    """Every implemented family matching the shape, directly or after
    conjugation (a conjugate match is served by reflecting columns)."""
    parts = as_partition(parts)
    if not parts:
        return set()
    families = set(_direct_families(parts))
    for fam in _direct_families(conjugate(parts)):
        families.add(ShapeFamily(fam.kind, fam.ell, fam.size, via_conjugate=True))
    return families


def _kernel_for(parts):
    """Pick the entry function for a directly supported shape, or None."""
    n = sum(parts)
    if all(p == 1 for p in parts[1:]):
        ell = parts[0]
        return lambda i, j: hook_entry(ell, n, i, j)
    if len(parts) <= 2:
        ell = parts[0]
        return lambda i, j: tworow_entry(ell, n, i, j)
    if len(set(parts)) == 1:
        ell, m = parts[0], len(parts)
        return lambda i, j: rect_Z(ell, m, i, j)
    return None


def count_matrix(parts, full: bool = False) -> CountMatrix:
    """Assemble the n x n count matrix from the applicable kernel.

    By default only the upper triangle is computed and mirrored; the
    symmetry is itself under test, so full=True computes every entry
    independently.
    """
    parts = as_partition(parts)
    n = sum(parts)
    entry = _kernel_for(parts)
    reflect = False
    if entry is None:
        entry = _kernel_for(conjugate(parts))
        reflect = True
    if entry is None:
        raise UnsupportedShape(f"no kernel for shape {parts}")
    rows = [[0] * n for _ in range(n)]
    for i in range(1, n + 1):
        start = 1 if full else i
        for j in range(start, n + 1):
            v = entry(i, n + 1 - j) if reflect else entry(i, j)
            rows[i - 1][j - 1] = v
            if not full:
                rows[j - 1][i - 1] = v
    return CountMatrix(n, tuple(tuple(r) for r in rows))


def marginal_matrix(parts, full: bool = False):
    """Count matrix and its doubly stochastic normalization.

    Raises UnsupportedShape outside the three families and their
    conjugates.
    """
    parts = as_partition(parts)
    counts = count_matrix(parts, full=full)
    denom = f_syt(parts) ** 2
    probs = tuple(
        tuple(Fraction(v, denom) for v in row) for row in counts.rows
    )
    return counts, ProbMatrix(counts.n, probs)


def support_predicate(family: ShapeFamily, i: int, j: int) -> bool:
    """Outer bound on the support: a nonzero entry implies True.

    The converse can fail (parity refinements near ell = n/2 are not
    encoded here).
    """
    if family.kind == "hook":
        n = family.size
        return not (n == 3 and family.ell == 2 and i == 2 and j == 2)
    if family.kind == "two-row":
        ell, n = family.ell, family.size
        d = abs(i - j)
        return d < min(n + 1 - ell, i, j) or 1 <= d <= ell
    if family.kind == "rect":
        ell, m = family.ell, family.size
        n = ell * m
        return n - abs(i - j) >= ell and n - abs(i + j - n - 1) >= m
    raise ValueError(f"unknown family kind {family.kind!r}")
