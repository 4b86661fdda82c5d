"""Nested-circle counts, partition triangles and their cross-checks.

A configuration of n pairwise disjoint, non-tangent circles is a forest:
each circle is a node and the circles immediately inside it are its
children. The closed-form count B(n) studied here weights each partition
n = n_1 + ... + n_l of the circles into top-level groups by
prod B(n_i - 1), which gives

    B(n)   = sum over partitions of n of prod B(part - 1)
    p2(n,k) = the same sum restricted to partitions with largest part k
    p1(n,k) = number of partitions of n with largest part k.

Three independent routes produce B (partition sum, sum of the p2 recursion,
Euler product), and an exhaustive forest enumeration gives the true number
of circle configurations for comparison. The two agree up to n = 5 and
first differ at n = 6, where the product weighting counts the two 3-circle
groups of 3 + 3 as ordered.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from . import kernels
from .exactcore import CoeffSeries, RationalInterval, catalan, pi_enclosure, series_mul_geometric

FOREST_ORACLE_MAX = 16

Partition = tuple[int, ...]


# -------------------------------------------------------------- partitions


def partitions_of(n: int) -> Iterator[Partition]:
    """Yield every partition of n once, in reverse-lexicographic order.

    Parts are nonincreasing; n = 0 yields the single empty partition.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n == 0:
        yield ()
        return
    parts = [n]
    while True:
        yield tuple(parts)
        ones = 0
        while parts and parts[-1] == 1:
            parts.pop()
            ones += 1
        if not parts:
            return
        parts[-1] -= 1
        top = parts[-1]
        rest = ones + 1
        while rest > top:
            parts.append(top)
            rest -= top
        parts.append(rest)


def partitions_with_largest(n: int, k: int) -> Iterator[Partition]:
    """Partitions of n whose largest part is exactly k."""
    if k < 1 or k > n:
        return
    for tail in _partitions_bounded(n - k, k):
        yield (k,) + tail


def _partitions_bounded(n: int, bound: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, bound), 0, -1):
        for tail in _partitions_bounded(n - first, first):
            yield (first,) + tail


def partition_count_oracle(n: int) -> int:
    """p(n) from Euler's pentagonal-number recurrence."""
    return _pentagonal_counts(n)[n]


@lru_cache(maxsize=None)
def _pentagonal_counts(nmax: int) -> tuple[int, ...]:
    if nmax < 0:
        raise ValueError(f"n must be nonnegative, got {nmax}")
    p = [1] + [0] * nmax
    for n in range(1, nmax + 1):
        total = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > n:
                break
            sign = 1 if j % 2 else -1
            total += sign * p[n - g1]
            g2 = j * (3 * j + 1) // 2
            if g2 <= n:
                total += sign * p[n - g2]
            j += 1
        p[n] = total
    return tuple(p)


# ---------------------------------------------------------------------- p1


@lru_cache(maxsize=None)
def p1_standard(n: int, k: int) -> int:
    """Partitions of n with largest part exactly k, via p1(n-1,k-1) + p1(n-k,k)."""
    if n < 0 or k < 0:
        return 0
    if n == 0 and k == 0:
        return 1
    if n == 0 or k == 0 or k > n:
        return 0
    return p1_standard(n - 1, k - 1) + p1_standard(n - k, k)


@lru_cache(maxsize=None)
def p1_division(n: int, k: int) -> int:
    """p1(n,k) by peeling off copies of the largest part k.

    With n = qk + r: for i = 1..q-1 copies of k the remainder n - ik is a
    partition with parts below k; with all q copies the remainder r is any
    partition of r. Self-contained: p(r) is taken from this same recursion.
    """
    if n < 1 or k < 1 or k > n:
        return 0
    if k == 1:
        return 1
    q, r = divmod(n, k)
    total = 0
    for i in range(1, q):
        total += sum(p1_division(n - i * k, j) for j in range(1, k))
    return total + _p_from_p1_division(r)


def _p_from_p1_division(m: int) -> int:
    if m == 0:
        return 1
    return sum(p1_division(m, j) for j in range(1, m + 1))


# ------------------------------------------------------------ B and p2


@lru_cache(maxsize=None)
def b_partition_sum(n: int) -> int:
    """B(n) = sum over partitions of n of prod B(part - 1), with B(0) = 1."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n == 0:
        return 1
    weights = [b_partition_sum(m) for m in range(n)]
    return sum(math.prod(weights[part - 1] for part in parts) for parts in partitions_of(n))


def p2_direct(n: int, k: int) -> int:
    """Weighted count over partitions of n with largest part k, weights from b_partition_sum."""
    if n < 1 or k < 1:
        raise ValueError(f"p2_direct needs n, k >= 1, got ({n}, {k})")
    if k > n:
        return 0
    weights = [b_partition_sum(m) for m in range(k)]
    return sum(math.prod(weights[part - 1] for part in parts) for parts in partitions_with_largest(n, k))


@lru_cache(maxsize=None)
def p2_division(n: int, k: int) -> int:
    """p2(n,k) by the division-algorithm recursion.

    n = qk + r:
        p2(n,k) = sum_{i=1}^{q-1} B(k-1)^i sum_{j=1}^{k-1} p2(n-ik, j)
                  + B(k-1)^q B(r)
    with B itself the column sum of this recursion.
    """
    if n < 1 or k < 1 or k > n:
        return 0
    if k == 1:
        return 1
    q, r = divmod(n, k)
    w = b_via_p2_sum(k - 1)
    total = 0
    for i in range(1, q):
        total += w**i * sum(p2_division(n - i * k, j) for j in range(1, k))
    return total + w**q * b_via_p2_sum(r)


@lru_cache(maxsize=None)
def b_via_p2_sum(n: int) -> int:
    """B(n) = sum_k p2(n,k) using p2_division."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n == 0:
        return 1
    return sum(p2_division(n, k) for k in range(1, n + 1))


def b_euler_product(nmax: int) -> CoeffSeries:
    """prod_{k=1}^{nmax} 1/(1 - B(k-1) x^k), truncated at degree nmax.

    B(k-1) is read off the partial product, whose coefficients below
    degree k are already final when factor k is applied.
    """
    if nmax < 0:
        raise ValueError(f"nmax must be nonnegative, got {nmax}")
    s = CoeffSeries.one(nmax)
    for k in range(1, nmax + 1):
        s = series_mul_geometric(s, s[k - 1], k)
    return s


@dataclass(frozen=True)
class BSequence:
    values: tuple[int, ...]
    method: str


def b_sequence(nmax: int, method: str = "partitionSum") -> BSequence:
    if method == "partitionSum":
        vals = tuple(b_partition_sum(n) for n in range(nmax + 1))
    elif method == "p2Sum":
        vals = tuple(b_via_p2_sum(n) for n in range(nmax + 1))
    elif method == "eulerProduct":
        vals = b_euler_product(nmax).coeffs
    else:
        raise ValueError(f"unknown method {method!r}")
    return BSequence(vals, method)


@dataclass(frozen=True)
class CountTriangle:
    """Exact table (n, k) -> count for 1 <= k <= n <= nmax; zero elsewhere."""

    kind: str
    method: str
    nmax: int
    values: dict = field(repr=False)

    def __getitem__(self, nk: tuple[int, int]) -> int:
        return self.values.get(nk, 0)

    def column(self, n: int) -> list[int]:
        return [self[n, k] for k in range(1, n + 1)]


_TRIANGLE_METHODS = {
    ("P1", "divisionRecursion"): p1_division,
    ("P1", "standardRecursion"): p1_standard,
    ("P2", "divisionRecursion"): p2_division,
    ("P2", "directSum"): p2_direct,
}


def count_triangle(kind: str, method: str, nmax: int) -> CountTriangle:
    try:
        fn = _TRIANGLE_METHODS[kind, method]
    except KeyError:
        raise ValueError(f"no {kind} triangle by {method!r}") from None
    values = {(n, k): fn(n, k) for n in range(1, nmax + 1) for k in range(1, n + 1)}
    return CountTriangle(kind, method, nmax, values)


# ------------------------------------------------------------ forest oracle


def canonical_tree(children) -> tuple:
    """Canonical nested-tuple form of a rooted tree from its children's forms.

    Children are ordered by (size, recursive key), so isomorphic trees get
    identical forms.
    """
    return tuple(sorted(children, key=_tree_key))


def canonical_forest(trees) -> tuple:
    return tuple(sorted(trees, key=_tree_key))


def _tree_size(tree: tuple) -> int:
    return 1 + sum(_tree_size(c) for c in tree)


def _tree_key(tree: tuple):
    return (_tree_size(tree), tuple(_tree_key(c) for c in tree))


def forest_from_parents(parents: list[int]) -> tuple:
    """Canonical form of the forest given by a parent array (-1 marks a root)."""
    kids: dict[int, list[int]] = {}
    for node, par in enumerate(parents):
        kids.setdefault(par, []).append(node)

    def build(node: int) -> tuple:
        return canonical_tree(build(c) for c in kids.get(node, []))

    return canonical_forest(build(r) for r in kids.get(-1, []))


@dataclass(frozen=True)
class CanonicalForest:
    trees: tuple
    n: int


def _forest_id_tables(n: int) -> tuple[list[int], list[list[tuple]]]:
    """Enumerate forests of size 0..n as sorted tuples of tree ids.

    Tree ids are handed out by size, so sorting a forest's ids sorts its
    trees by size first. A forest is a nonincreasing id tuple; tree ids of
    size m+1 are assigned one per forest of size m (the root's children).
    """
    tree_size: list[int] = []
    forests: list[list[tuple]] = [[()]]
    tree_size.append(1)  # id 0: the single node, children = forests[0][0]
    for m in range(1, n + 1):
        new: list[tuple] = []
        for t, size in enumerate(tree_size):
            if size > m:
                break
            pool = forests[m - size]
            cut = bisect_right(pool, (t, math.inf))
            new.extend((t,) + rest for rest in pool[:cut])
        forests.append(new)
        tree_size.extend([m + 1] * len(new))
    return tree_size, forests


def enumerate_forests(n: int) -> Iterator[CanonicalForest]:
    """Every forest of unordered rooted trees on n nodes, one per isomorphism class."""
    _check_oracle_range(n)
    tree_size, forests = _forest_id_tables(n)
    # map tree id -> its children forest (ids), tree ids of size s+1 follow forests[s]
    children = [f for level in forests for f in level]
    memo: dict[int, tuple] = {}

    def nested(t: int) -> tuple:
        if t not in memo:
            memo[t] = canonical_tree(nested(c) for c in children[t])
        return memo[t]

    for f in forests[n]:
        yield CanonicalForest(canonical_forest(nested(t) for t in f), n)


def forest_oracle(n: int, method: str = "levels") -> int:
    """Number of circle configurations on n circles (forests on n nodes).

    ``method="levels"`` walks canonical level sequences with the compiled
    kernel when available; ``method="multiset"`` builds forests explicitly
    as sorted multisets of canonical trees.
    """
    _check_oracle_range(n)
    if method == "levels":
        return kernels.count_rooted_forests(n)
    if method == "multiset":
        _, forests = _forest_id_tables(n)
        return len(forests[n])
    raise ValueError(f"unknown method {method!r}")


def _check_oracle_range(n: int) -> None:
    if n < 0 or n > FOREST_ORACLE_MAX:
        raise ValueError(f"forest oracle supports 0 <= n <= {FOREST_ORACLE_MAX}, got {n}")


# ------------------------------------------------------------------ reports


@dataclass(frozen=True)
class BoundsRow:
    n: int
    b: int
    lower: int  # 2^(n-1)
    catalan: int
    lower_holds: bool
    catalan_holds: bool
    catalan_strict: bool
    sandwich_status: str  # pass / fail / inconclusive
    bits_used: int
    sqrt_n_pi: RationalInterval

    @property
    def ok(self) -> bool:
        strict_ok = self.catalan_strict or self.n < 3
        return self.lower_holds and self.catalan_holds and strict_ok and self.sandwich_status == "pass"


def bounds_report(n: int, bits: int = 256, cap: int = 4096) -> BoundsRow:
    """Check 2^(n-1) <= B(n) <= Catalan(n) and B(n) < 4^n / ((n+1) sqrt(n pi)).

    The last one is decided as B^2 (n+1)^2 n pi < 16^n, proved with the
    upper end of a pi enclosure and refuted with the lower end.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    b = b_partition_sum(n)
    cat = catalan(n)
    lhs = b * b * (n + 1) ** 2 * n
    rhs = 1 << (4 * n)
    bits = max(bits, 8)
    while True:
        pi = pi_enclosure(bits)
        if lhs * pi.hi < rhs:
            status = "pass"
        elif lhs * pi.lo >= rhs:
            status = "fail"
        else:
            status = "inconclusive"
        if status != "inconclusive" or bits >= cap:
            break
        bits = min(2 * bits, cap)
    return BoundsRow(
        n=n,
        b=b,
        lower=1 << (n - 1),
        catalan=cat,
        lower_holds=(1 << (n - 1)) <= b,
        catalan_holds=b <= cat,
        catalan_strict=b < cat,
        sandwich_status=status,
        bits_used=bits,
        sqrt_n_pi=(pi * n).sqrt(bits),
    )


@dataclass(frozen=True)
class DiscrepancyRow:
    n: int
    product_rule: int
    oracle: int

    @property
    def equal(self) -> bool:
        return self.product_rule == self.oracle


def discrepancy_report(nmax: int) -> tuple[list[DiscrepancyRow], int | None]:
    """Rows (n, B(n), forest count) for n = 0..nmax and the first n where they differ."""
    _check_oracle_range(nmax)
    rows = [DiscrepancyRow(n, b_partition_sum(n), forest_oracle(n)) for n in range(nmax + 1)]
    first = next((r.n for r in rows if not r.equal), None)
    return rows, first
