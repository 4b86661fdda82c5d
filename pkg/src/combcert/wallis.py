"""The normalized central binomial coefficient f(n) = prod_{i<=n} (1 - 1/(2i)).

Covers the exact identity

    1 - sum_{k<=n} f(k)^2 / (2k-1) = (2n+1) f(n)^2,

the envelopes l_n = 2n f(n)^2 < 2/pi < u_n = (2n+1) f(n)^2, the certified
inequality 1/sqrt(n pi + pi/2) < f(n) < 1/sqrt(n pi), and the two
telescoping sums sum f(k)/(2k-1) and sum 1/(4k^2-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .exactcore import RationalInterval, binomial, pi_enclosure

DEFAULT_BITS_CAP = 4096

QUARTER_SUM_NOTE = (
    "sum_{k>=1} 1/(4k^2-1) telescopes to n/(2n+1) and converges to 1/2; "
    "the value pi/2 printed for this sum is not its limit"
)


@dataclass(frozen=True)
class WallisState:
    """f(n) together with the running sums that involve it, all exact."""

    n: int
    f: Fraction
    sum_sq: Fraction
    sum_lin: Fraction
    sum_tel: Fraction

    @classmethod
    def initial(cls) -> WallisState:
        half = Fraction(1, 2)
        return cls(n=1, f=half, sum_sq=half * half, sum_lin=half, sum_tel=Fraction(1, 3))


def advance(state: WallisState) -> WallisState:
    """Step to n+1 using f(n+1) = f(n) (2n+1)/(2n+2)."""
    n = state.n
    k = n + 1
    f = state.f * Fraction(2 * n + 1, 2 * n + 2)
    return WallisState(
        n=k,
        f=f,
        sum_sq=state.sum_sq + f * f / (2 * k - 1),
        sum_lin=state.sum_lin + f / (2 * k - 1),
        sum_tel=state.sum_tel + Fraction(1, 4 * k * k - 1),
    )


def states(nmax: int) -> Iterator[WallisState]:
    """Yield the states for n = 1..nmax in order."""
    if nmax < 1:
        return
    s = WallisState.initial()
    yield s
    while s.n < nmax:
        s = advance(s)
        yield s


def state_at(n: int) -> WallisState:
    _require_positive(n)
    for s in states(n):
        pass
    return s


def wallis_f(n: int) -> Fraction:
    """f(n) from the central binomial coefficient, C(2n, n) / 4^n."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return Fraction(binomial(2 * n, n), 4**n)


def envelopes(n: int) -> tuple[Fraction, Fraction]:
    """Return (l_n, u_n) = (2n f(n)^2, (2n+1) f(n)^2)."""
    _require_positive(n)
    f2 = wallis_f(n) ** 2
    return 2 * n * f2, (2 * n + 1) * f2


def identity_holds(state: WallisState) -> bool:
    return 1 - state.sum_sq == (2 * state.n + 1) * state.f * state.f


def linear_sum_holds(state: WallisState) -> bool:
    return state.sum_lin == 1 - state.f


def quarter_sum_holds(state: WallisState) -> bool:
    return state.sum_tel == Fraction(state.n, 2 * state.n + 1)


def identity_check(n: int) -> bool:
    """Exact check of 1 - sum f(k)^2/(2k-1) == (2n+1) f(n)^2 at n."""
    return identity_holds(state_at(n))


def linear_sum_check(n: int) -> bool:
    """sum_{k<=n} f(k)/(2k-1) == 1 - f(n); the terms telescope as f(k-1) - f(k)."""
    return linear_sum_holds(state_at(n))


def double_factorial(m: int) -> int:
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


def quarter_summand_identity(k: int) -> bool:
    """f(k) (2k)!! / ((2k-1) (2k+1)!!) == 1/(4k^2 - 1)."""
    lhs = Fraction(double_factorial(2 * k - 1), double_factorial(2 * k)) * Fraction(
        double_factorial(2 * k), (2 * k - 1) * double_factorial(2 * k + 1)
    )
    return lhs == Fraction(1, 4 * k * k - 1)


def telescope_quarter_check(n: int) -> bool:
    """sum_{k<=n} 1/(4k^2-1) == n/(2n+1), plus the summand rewrite for every k <= n."""
    _require_positive(n)
    return quarter_sum_holds(state_at(n)) and all(quarter_summand_identity(k) for k in range(1, n + 1))


def two_over_pi_enclosure(bits: int) -> RationalInterval:
    return 2 / pi_enclosure(bits)


# ----------------------------------------------------------- certification


@dataclass(frozen=True)
class CertResult:
    """Verdict for 1/sqrt(n pi + pi/2) < f(n) < 1/sqrt(n pi) at one n.

    ``lower_holds``/``upper_holds`` are True only when decided by an exact
    rational comparison against a certified pi enclosure. ``status`` is
    "pass", "fail" (a side was refuted) or "inconclusive" (the bit cap was
    hit before either outcome was decided). ``margin`` is the smaller of the
    two certified slacks pi_lo - 2/u_n and 2/l_n - pi_hi.
    """

    n: int
    lower_holds: bool
    upper_holds: bool
    bits_used: int
    margin: Fraction
    status: str

    @property
    def proved(self) -> bool:
        return self.status == "pass"


def _decide(n: int, central: int, pi: RationalInterval) -> tuple[int, int]:
    """Compare pi against 2/u_n and 2/l_n without leaving the integers.

    Returns (lower, upper), each +1 proved, -1 refuted, 0 undecided.
    """
    # u_n = (2n+1) C^2 / 16^n; pi > 2/u_n  <=>  pi (2n+1) C^2 > 2 * 16^n
    c2 = central * central
    rhs = 2 << (4 * n)
    u_weight = (2 * n + 1) * c2
    l_weight = 2 * n * c2
    lo_p, lo_q = pi.lo.numerator, pi.lo.denominator
    hi_p, hi_q = pi.hi.numerator, pi.hi.denominator
    if lo_p * u_weight > rhs * lo_q:
        lower = 1
    elif hi_p * u_weight < rhs * hi_q:
        lower = -1
    else:
        lower = 0
    # pi < 2/l_n  <=>  pi * 2n C^2 < 2 * 16^n
    if hi_p * l_weight < rhs * hi_q:
        upper = 1
    elif lo_p * l_weight > rhs * lo_q:
        upper = -1
    else:
        upper = 0
    return lower, upper


def _certify_with_central(n: int, central: int, bits: int, cap: int) -> CertResult:
    bits = max(bits, 8)
    while True:
        pi = pi_enclosure(bits)
        lower, upper = _decide(n, central, pi)
        decided = lower != 0 and upper != 0
        if decided or bits >= cap:
            break
        bits = min(2 * bits, cap)
    if lower == 1 and upper == 1:
        status = "pass"
    elif lower == -1 or upper == -1:
        status = "fail"
    else:
        status = "inconclusive"
    margin = Fraction(0)
    if status == "pass":
        f2 = Fraction(central * central, 1 << (4 * n))
        margin = min(pi.lo - 2 / ((2 * n + 1) * f2), 2 / (2 * n * f2) - pi.hi)
    return CertResult(n, lower == 1, upper == 1, bits, margin, status)


def certify_inequality(n: int, bits: int = 256, cap: int = DEFAULT_BITS_CAP) -> CertResult:
    """Certify both sides of the central-binomial inequality at n.

    Starts from a ``bits``-bit pi enclosure and doubles the precision while
    either comparison is undecided, stopping at ``cap``.
    """
    _require_positive(n)
    return _certify_with_central(n, binomial(2 * n, n), bits, cap)


def certify_sweep(nmax: int, bits: int = 256, cap: int = DEFAULT_BITS_CAP) -> Iterator[CertResult]:
    """certify_inequality for n = 1..nmax, updating C(2n, n) incrementally."""
    central = 1
    for n in range(1, nmax + 1):
        central = central * 2 * (2 * n - 1) // n
        yield _certify_with_central(n, central, bits, cap)


def _require_positive(n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
