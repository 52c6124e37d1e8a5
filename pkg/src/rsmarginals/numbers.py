"""Exact counting numbers: binomials, multiset numbers, ballot numbers, Wallis fractions.

All functions return Python ints (arbitrary precision) or Fractions.
Out-of-domain arguments silently return 0; the closed-form kernels rely on
that vanishing to delimit their sums.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial


@dataclass(frozen=True, order=True)
class HalfInt:
    """An integer or half-integer, stored as twice its value."""

    twice: int

    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def as_int(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self} is not an integer")
        return self.twice // 2

    def __add__(self, other):
        if isinstance(other, HalfInt):
            return HalfInt(self.twice + other.twice)
        return HalfInt(self.twice + 2 * other)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, HalfInt):
            return HalfInt(self.twice - other.twice)
        return HalfInt(self.twice - 2 * other)

    def __rsub__(self, other):
        return HalfInt(2 * other - self.twice)

    def __neg__(self):
        return HalfInt(-self.twice)

    def __float__(self):
        return self.twice / 2

    def __repr__(self):
        if self.is_integer():
            return str(self.twice // 2)
        return f"{self.twice}/2"


def _to_int_or_none(a):
    """Resolve an argument to a plain int, or None if it is a half-integer."""
    if isinstance(a, HalfInt):
        return a.as_int() if a.is_integer() else None
    return int(a)


def binomial(a: int, b: int) -> int:
    """C(a, b) = a!/(b!(a-b)!) when a >= b >= 0, else 0."""
    if a >= b >= 0:
        return comb(a, b)
    return 0


def multiset(a, b) -> int:
    """The multiset number <a b> = C(a+b-1, b).

    Arguments may be ints or HalfInts; any half-integer argument gives 0.
    """
    ai = _to_int_or_none(a)
    bi = _to_int_or_none(b)
    if ai is None or bi is None:
        return 0
    return binomial(ai + bi - 1, bi)


def gen_ballot(a: int, c: int, b: int) -> int:
    """Generalized ballot number B(a -> c, b) = C(a+b, b) - C(a+b, b-c-1).

    Counts skew two-row standard tableaux of shape (a+c, b)/(c).
    Zero unless a, b, c >= 0 and a + c >= b.
    """
    if a < 0 or b < 0 or c < 0 or a + c < b:
        return 0
    return binomial(a + b, b) - binomial(a + b, b - c - 1)


def ballot(a: int, b: int) -> int:
    """Ballot number B(a, b) = C(a+b, b) - C(a+b, b-1); counts two-row tableaux of shape (a, b)."""
    return gen_ballot(a, 0, b)


def wallis_odd(m: int) -> Fraction:
    """Odd Wallis integral W_{2m+1} = (2m)!!/(2m+1)!! = 4^m (m!)^2 / (2m+1)!, exactly."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return Fraction(4**m * factorial(m) ** 2, factorial(2 * m + 1))
