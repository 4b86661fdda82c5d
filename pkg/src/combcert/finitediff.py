"""Forward differences of power sequences and the surjection count."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .exactcore import binomial


@dataclass(frozen=True)
class DiffTable:
    """rows[0] is the input; rows[j][i] = rows[j-1][i+1] - rows[j-1][i]."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def last(self) -> tuple[int, ...]:
        return self.rows[-1]


def difference_table(seq: Sequence[int], steps: int) -> DiffTable:
    if steps < 0:
        raise ValueError(f"steps must be nonnegative, got {steps}")
    if len(seq) <= steps:
        raise ValueError(f"need more than {steps} terms, got {len(seq)}")
    rows = [tuple(seq)]
    for _ in range(steps):
        prev = rows[-1]
        rows.append(tuple(b - a for a, b in zip(prev, prev[1:])))
    return DiffTable(tuple(rows))


def power_diff_constant(n: int) -> int:
    """Difference 1^n, 2^n, ..., (n+2)^n exactly n times and return the constant row value."""
    if not 1 <= n <= 20:
        raise ValueError(f"n must be in 1..20, got {n}")
    table = difference_table([k**n for k in range(1, n + 3)], n)
    last = table.last
    if len(set(last)) != 1:
        raise AssertionError(f"final difference row not constant: {last}")
    return last[0]


def surjections(n: int, m: int) -> int:
    """sum_{k=0}^{m} (-1)^k C(m,k) (m-k)^n, with 0^0 = 1."""
    if n < 0 or m < 0:
        raise ValueError(f"arguments must be nonnegative, got ({n}, {m})")
    return sum((-1) ** k * binomial(m, k) * (m - k) ** n for k in range(m + 1))


def a_recursion(n: int, j: int) -> int:
    """A(n,1) = n^n - (n-1)^n and A(n,j) = A(n,j-1) - A(n-1,j-1).

    The exponent stays n throughout, so A(n-1, j-1) below means the
    (j-1)-th difference of the n-th powers ending at (n-1)^n.
    """
    if not 1 <= j <= n:
        raise ValueError(f"need 1 <= j <= n, got ({n}, {j})")
    return _a(n, n, j)


@lru_cache(maxsize=None)
def _a(power: int, top: int, j: int) -> int:
    if j == 0:
        return top**power
    return _a(power, top, j - 1) - _a(power, top - 1, j - 1)


def a_closed(n: int, j: int) -> int:
    """sum_{k=0}^{j} (-1)^k C(j,k) (n-k)^n."""
    return sum((-1) ** k * binomial(j, k) * (n - k) ** n for k in range(j + 1))

