"""Finite binomial sums with closed forms, checked in exact rationals.

S(x, r) = sum_{i=0}^{n} r/(r+i) (-1)^i C(n,i) x^(r+i)   (integral of r y^(r-1) (1-y)^n)
M(x, r) = sum_{i=0}^{n} r/(r+i)        C(n,i) x^(r+i)   (integral of r y^(r-1) (1+y)^n)

plus a telescoping series over reciprocal rising products and the
Stirling-number expansion of sum C(n,r) a^(n-r) r^k (bm)^r.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactcore import binomial, falling_factorial, stirling2


@dataclass(frozen=True)
class SeriesParams:
    n: int
    r: int
    x: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", Fraction(self.x))
        if self.n < 1 or self.r < 1:
            raise ValueError(f"n and r must be positive, got n={self.n}, r={self.r}")


@dataclass(frozen=True)
class PowerSumParams:
    a: Fraction
    b: Fraction
    m: Fraction
    n: int
    k: int

    def __post_init__(self) -> None:
        for name in ("a", "b", "m"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.m <= 0:
            raise ValueError(f"m must be positive, got {self.m}")
        if self.n < 1 or self.k < 1:
            raise ValueError(f"n and k must be positive, got n={self.n}, k={self.k}")


def _perm_ratio(r: int, n: int, i: int) -> Fraction:
    """P_i^r / P_i^(n+i) as an exact fraction."""
    return Fraction(falling_factorial(r, i), falling_factorial(n + i, i))


def s_direct(p: SeriesParams) -> Fraction:
    n, r, x = p.n, p.r, p.x
    return sum(
        (Fraction(r, r + i) * (-1) ** i * binomial(n, i) * x ** (r + i) for i in range(n + 1)),
        Fraction(0),
    )


def s_closed(p: SeriesParams) -> Fraction:
    """-sum_{i=1}^{r} x^(r-i) (1-x)^(n+i) P_i^r / P_i^(n+i) + 1/C(n+r, r)."""
    n, r, x = p.n, p.r, p.x
    head = sum(
        (x ** (r - i) * (1 - x) ** (n + i) * _perm_ratio(r, n, i) for i in range(1, r + 1)),
        Fraction(0),
    )
    return -head + Fraction(1, binomial(n + r, r))


def m_direct(p: SeriesParams) -> Fraction:
    n, r, x = p.n, p.r, p.x
    return sum(
        (Fraction(r, r + i) * binomial(n, i) * x ** (r + i) for i in range(n + 1)),
        Fraction(0),
    )


def m_closed(p: SeriesParams) -> Fraction:
    """sum_{i=1}^{r} (-1)^(i-1) x^(r-i) (1+x)^(n+i) P_i^r / P_i^(n+i) + (-1)^r / C(n+r, r)."""
    n, r, x = p.n, p.r, p.x
    head = sum(
        ((-1) ** (i - 1) * x ** (r - i) * (1 + x) ** (n + i) * _perm_ratio(r, n, i) for i in range(1, r + 1)),
        Fraction(0),
    )
    return head + Fraction((-1) ** r, binomial(n + r, r))


# ------------------------------------------------------------ telescoping


def _rising(start: int, count: int) -> int:
    out = 1
    for i in range(count):
        out *= start + i
    return out


def telescope_product_series(m: int, n: int, upper: int) -> Fraction:
    """Partial sum sum_{r=m}^{upper} 1 / (r (r+1) ... (r+n)), summed term by term."""
    if m < 1 or n < 1:
        raise ValueError(f"m and n must be positive, got m={m}, n={n}")
    if upper < m:
        raise ValueError(f"upper limit {upper} below start {m}")
    return sum((Fraction(1, _rising(r, n + 1)) for r in range(m, upper + 1)), Fraction(0))


def telescope_closed(m: int, n: int, upper: int) -> Fraction:
    """(1/n) (1/(m ... (m+n-1)) - 1/((upper+1) ... (upper+n)))."""
    return Fraction(1, n) * (Fraction(1, _rising(m, n)) - Fraction(1, _rising(upper + 1, n)))


def telescope_limit(m: int, n: int) -> Fraction:
    """Value of the full series: 1 / (n n! C(n+m-1, m-1))."""
    return Fraction(1, n * _rising(1, n) * binomial(n + m - 1, m - 1))


def telescope_summand_identity(n: int, r: int) -> bool:
    """n / (r C(n+r, r)) == 1/C(n+r-1, r-1) - 1/C(n+r, r)."""
    lhs = Fraction(n, r * binomial(n + r, r))
    return lhs == Fraction(1, binomial(n + r - 1, r - 1)) - Fraction(1, binomial(n + r, r))


# -------------------------------------------------------------- power sum


def power_sum_both_sides(p: PowerSumParams) -> tuple[Fraction, Fraction]:
    """Return (lhs, rhs) of

        sum_{r=0}^{n} C(n,r) a^(n-r) r^k (bm)^r
            = sum_{i=1}^{k} S(k,i) P_i^n (a+bm)^(n-i) (bm)^i.

    Terms with i > n vanish because P_i^n = 0, so any k >= 1 is accepted.
    """
    a, n, k = p.a, p.n, p.k
    bm = p.b * p.m
    # r = 0 contributes 0^k = 0 since k >= 1
    lhs = sum((binomial(n, r) * a ** (n - r) * r**k * bm**r for r in range(1, n + 1)), Fraction(0))
    rhs = Fraction(0)
    for i in range(1, min(k, n) + 1):
        rhs += stirling2(k, i) * falling_factorial(n, i) * (a + bm) ** (n - i) * bm**i
    return lhs, rhs


def power_sum_at_one(n: int, k: int) -> int:
    """sum_{r=1}^{n} C(n,r) r^k via sum_i S(k,i) P_i^n 2^(n-i)."""
    return sum(stirling2(k, i) * falling_factorial(n, i) * 2 ** (n - i) for i in range(1, min(k, n) + 1))
