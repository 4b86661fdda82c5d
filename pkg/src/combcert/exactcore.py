"""Exact arithmetic primitives shared by every other module.

Integers are Python ints and rationals are :class:`fractions.Fraction`;
both are exact, so the only extra machinery here is what the standard
library lacks: rational interval enclosures, a certified enclosure of pi,
and truncated power series with integer coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

Rational = Fraction


def binomial(n: int, k: int) -> int:
    """C(n, k) with the convention C(n, k) = 0 for k outside [0, n]."""
    if n < 0:
        raise ValueError(f"binomial: n must be nonnegative, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def falling_factorial(n: int, i: int) -> int:
    """n (n-1) ... (n-i+1); zero once a factor (n-n) appears, i.e. i > n."""
    if n < 0 or i < 0:
        raise ValueError(f"falling_factorial: arguments must be nonnegative, got ({n}, {i})")
    return math.perm(n, i)


@lru_cache(maxsize=None)
def _stirling2_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _stirling2_row(n - 1)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        above = prev[k] if k < len(prev) else 0
        row[k] = k * above + prev[k - 1]
    return tuple(row)


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind via S(n,k) = k S(n-1,k) + S(n-1,k-1)."""
    if n < 0 or k < 0:
        raise ValueError(f"stirling2: arguments must be nonnegative, got ({n}, {k})")
    if k > n:
        return 0
    if n > 900:
        # keep the row cache from recursing past the interpreter limit
        for m in range(0, n, 500):
            _stirling2_row(m)
    return _stirling2_row(n)[k]


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def format_rational(q: Fraction | int) -> str:
    """Render an exact value as "p/q" (integers as "p/1")."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------- intervals


@dataclass(frozen=True)
class RationalInterval:
    """Closed interval [lo, hi] with rational endpoints.

    Arithmetic returns intervals that contain every pointwise result, so an
    enclosure of an irrational constant stays an enclosure through any
    expression built from these operations.
    """

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, q) -> RationalInterval:
        return cls(q, q)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, q) -> bool:
        return self.lo <= q <= self.hi

    def contains_interval(self, other: RationalInterval) -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def intersects(self, other: RationalInterval) -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def _coerce(self, other) -> RationalInterval:
        if isinstance(other, RationalInterval):
            return other
        return RationalInterval.point(other)

    def __add__(self, other) -> RationalInterval:
        o = self._coerce(other)
        return RationalInterval(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __neg__(self) -> RationalInterval:
        return RationalInterval(-self.hi, -self.lo)

    def __sub__(self, other) -> RationalInterval:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> RationalInterval:
        return self._coerce(other) - self

    def __mul__(self, other) -> RationalInterval:
        o = self._coerce(other)
        corners = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return RationalInterval(min(corners), max(corners))

    __rmul__ = __mul__

    def reciprocal(self) -> RationalInterval:
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError("interval contains zero")
        return RationalInterval(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other) -> RationalInterval:
        return self * self._coerce(other).reciprocal()

    def __rtruediv__(self, other) -> RationalInterval:
        return self._coerce(other) * self.reciprocal()

    def sqrt(self, bits: int) -> RationalInterval:
        """Outward-rounded square root, endpoints on the 2**-bits grid."""
        if self.lo < 0:
            raise ValueError("sqrt of interval with negative part")
        scale = 1 << (2 * bits)
        # floor(sqrt(lo)) and ceil(sqrt(hi)) on the dyadic grid
        lo_scaled = (self.lo.numerator * scale) // self.lo.denominator
        lo_root = math.isqrt(lo_scaled)
        hi_scaled = -((-self.hi.numerator * scale) // self.hi.denominator)
        hi_root = math.isqrt(hi_scaled)
        if hi_root * hi_root < hi_scaled:
            hi_root += 1
        return RationalInterval(Fraction(lo_root, 1 << bits), Fraction(hi_root, 1 << bits))

    def __str__(self) -> str:
        return f"[{format_rational(self.lo)}, {format_rational(self.hi)}]"


# ---------------------------------------------------------------------- pi


def _arctan_inv_bounds(x: int, prec: int) -> tuple[int, int]:
    """Integers (lo, hi) with lo <= 2**prec * arctan(1/x) <= hi.

    Each term is floored, so the running sum is off by at most one unit per
    term; the alternating tail is bounded by the first omitted term.
    """
    one = 1 << prec
    x2 = x * x
    power = one // x  # floor(one / x**(2j+1)), refreshed each step
    total = 0
    terms = 0
    j = 0
    while power:
        term = power // (2 * j + 1)
        total += -term if j & 1 else term
        terms += 1
        j += 1
        power //= x2
    # first omitted term is < 1 unit; flooring error per term < 2 units
    slack = 2 * terms + 2
    return total - slack, total + slack


@lru_cache(maxsize=64)
def _pi_floor(grid_bits: int) -> int:
    """floor(pi * 2**grid_bits), found by tightening a Machin enclosure."""
    prec = grid_bits + 32
    while True:
        a_lo, a_hi = _arctan_inv_bounds(5, prec)
        b_lo, b_hi = _arctan_inv_bounds(239, prec)
        lo = 16 * a_lo - 4 * b_hi
        hi = 16 * a_hi - 4 * b_lo
        shift = prec - grid_bits
        if lo >> shift == hi >> shift:
            return lo >> shift
        prec += 32


def pi_enclosure(bits: int) -> RationalInterval:
    """Certified rational interval around pi of width 2**-(bits+1).

    The endpoints are consecutive points of the 2**-(bits+1) grid, so
    lo < pi < hi strictly and enclosures at higher precision nest inside
    those at lower precision.
    """
    if bits < 8:
        raise ValueError(f"pi_enclosure: bits must be >= 8, got {bits}")
    g = bits + 1
    m = _pi_floor(g)
    return RationalInterval(Fraction(m, 1 << g), Fraction(m + 1, 1 << g))


# ------------------------------------------------------------ power series


@dataclass(frozen=True)
class CoeffSeries:
    """Power series with integer coefficients truncated after degree ``degree``."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("CoeffSeries needs at least the constant term")

    @classmethod
    def one(cls, degree: int) -> CoeffSeries:
        return cls((1,) + (0,) * degree)

    @classmethod
    def from_list(cls, coeffs: Iterable[int], degree: int) -> CoeffSeries:
        c = list(coeffs)[: degree + 1]
        return cls(tuple(c) + (0,) * (degree + 1 - len(c)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: CoeffSeries) -> CoeffSeries:
        d = min(self.degree, other.degree)
        return CoeffSeries(tuple(a + b for a, b in zip(self.coeffs[: d + 1], other.coeffs)))

    def __mul__(self, other: CoeffSeries) -> CoeffSeries:
        d = min(self.degree, other.degree)
        a, b = self.coeffs, other.coeffs
        out = [0] * (d + 1)
        for i in range(d + 1):
            if a[i]:
                ai = a[i]
                for j in range(d + 1 - i):
                    out[i + j] += ai * b[j]
        return CoeffSeries(tuple(out))


def series_mul_geometric(s: CoeffSeries, c: int, k: int) -> CoeffSeries:
    """Multiply ``s`` by 1/(1 - c x**k) = sum_j c**j x**(jk), truncated.

    Uses the recurrence t[d] = s[d] + c * t[d-k], which is exact and avoids
    materialising the geometric factor.
    """
    if k < 1:
        raise ValueError(f"series_mul_geometric: k must be >= 1, got {k}")
    if c == 0:
        return s
    out = list(s.coeffs)
    for d in range(k, len(out)):
        out[d] += c * out[d - k]
    return CoeffSeries(tuple(out))
