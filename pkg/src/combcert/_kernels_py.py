"""Pure-Python versions of the enumeration kernels.

Same signatures and results as the compiled ``_kernels`` module; used when
the extension is not built and as the reference side of the benchmark.
"""


def count_rooted_trees(nodes):
    """Number of unlabeled rooted trees on ``nodes`` vertices.

    Walks every canonical level sequence (root at level 0, subtrees in
    nonincreasing order) with the Beyer-Hedetniemi successor rule, so each
    isomorphism class is visited exactly once.
    """
    if nodes < 1:
        return 0
    if nodes <= 2:
        return 1
    level = list(range(nodes))
    count = 1
    while True:
        p = nodes - 1
        while p > 0 and level[p] <= 1:
            p -= 1
        if p == 0:
            return count
        q = p - 1
        while level[q] != level[p] - 1:
            q -= 1
        shift = p - q
        for i in range(p, nodes):
            level[i] = level[i - shift]
        count += 1


def count_rooted_forests(n):
    """Forests on n nodes; adding a common root makes them trees on n+1."""
    if n < 0:
        return 0
    return count_rooted_trees(n + 1)


def largest_part_histogram(n):
    """Enumerate the partitions of n; return counts indexed by largest part.

    Result has length n+1; entry k is the number of partitions whose largest
    part is exactly k (entry 0 is 1 for n == 0, else 0).
    """
    hist = [0] * (n + 1)
    if n == 0:
        hist[0] = 1
        return hist
    # reverse-lexicographic walk, parts kept in a[0..m-1]
    a = [0] * (n + 1)
    a[0] = n
    m = 1
    while True:
        hist[a[0]] += 1
        # drop trailing ones, find last part > 1
        ones = 0
        while m > 0 and a[m - 1] == 1:
            ones += 1
            m -= 1
        if m == 0:
            return hist
        a[m - 1] -= 1
        part = a[m - 1]
        rest = ones + 1
        while rest > part:
            a[m] = part
            m += 1
            rest -= part
        a[m] = rest
        m += 1
