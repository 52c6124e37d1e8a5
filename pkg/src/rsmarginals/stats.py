"""Fixed-point statistics of shape-conditioned random permutations.

The expected number of fixed points is the trace of the probability
matrix.  For hooks (n-m, 1^m) and two-row shapes (n-m, m) the trace is
evaluated directly from the diagonal kernels, which stays cheap at
n = 2000 thanks to the clipped sum ranges, and converges to the odd
Wallis fraction W_{2m+1} as n grows.
"""

from dataclasses import dataclass
from fractions import Fraction

from .numbers import wallis_odd
from .young import f_syt
from .marginals import ProbMatrix, hook_entry, tworow_V


@dataclass(frozen=True)
class TraceReport:
    family: str  # "hook" | "two-row"
    m: int
    n: int
    trace_count: int
    trace_prob: Fraction  # trace of the probability matrix
    wallis_limit: Fraction  # limit of trace_prob / n


def expected_fixed_points(P: ProbMatrix) -> Fraction:
    """Expected |Fix(sigma)| = tr P."""
    return P.trace()


def hook_trace(n: int, m: int) -> int:
    """Diagonal sum of the count matrix for the hook (n-m, 1^m)."""
    if not 0 <= m <= n - 1:
        raise ValueError(f"need 0 <= m <= n-1, got m={m}, n={n}")
    ell = n - m
    return sum(hook_entry(ell, n, i, i) for i in range(1, n + 1))


def tworow_trace(n: int, m: int) -> int:
    """Diagonal sum of the count matrix for the two-row shape (n-m, m).

    Only the single-line term contributes: the two-line term vanishes on
    the diagonal.
    """
    if not 0 <= 2 * m <= n:
        raise ValueError(f"need 0 <= m <= n/2, got m={m}, n={n}")
    ell = n - m
    return sum(tworow_V(ell, n, i, i) for i in range(1, n + 1))


def _hook_shape(n, m):
    return (n - m,) + (1,) * m


def _tworow_shape(n, m):
    return (n - m, m) if m else (n,)


def trace_report(family: str, n: int, m: int) -> TraceReport:
    if family == "hook":
        count = hook_trace(n, m)
        shape = _hook_shape(n, m)
    elif family == "two-row":
        count = tworow_trace(n, m)
        shape = _tworow_shape(n, m)
    else:
        raise ValueError(f"unknown family {family!r}")
    prob = Fraction(count, f_syt(shape) ** 2)
    return TraceReport(family, m, n, count, prob, wallis_odd(m))


def convergence_table(n: int, m_max: int) -> list:
    """TraceReports for both families, m = 0..m_max, at a common n."""
    if m_max > n // 2:
        raise ValueError(f"need m_max <= n/2, got m_max={m_max}, n={n}")
    reports = []
    for m in range(m_max + 1):
        reports.append(trace_report("hook", n, m))
        reports.append(trace_report("two-row", n, m))
    return reports


def format_3dp(x: Fraction) -> str:
    """Render to 3 decimal places, rounding halves away from zero."""
    scaled = abs(Fraction(x)) * 1000
    whole, rem = divmod(scaled.numerator, scaled.denominator)
    if 2 * rem >= scaled.denominator:
        whole += 1
    sign = "-" if x < 0 else ""
    return f"{sign}{whole // 1000}.{whole % 1000:03d}"
