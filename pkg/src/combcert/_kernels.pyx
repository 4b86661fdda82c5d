# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled enumeration kernels; see ``_kernels_py`` for the reference."""

from libc.stdlib cimport malloc, free


def count_rooted_trees(int nodes):
    cdef int *level
    cdef int i, p, q, shift
    cdef long long count
    if nodes < 1:
        return 0
    if nodes <= 2:
        return 1
    level = <int *> malloc(nodes * sizeof(int))
    if level == NULL:
        raise MemoryError()
    try:
        for i in range(nodes):
            level[i] = i
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
    finally:
        free(level)


def count_rooted_forests(int n):
    if n < 0:
        return 0
    return count_rooted_trees(n + 1)


def largest_part_histogram(int n):
    cdef int *a
    cdef long long *hist
    cdef int m, ones, part, rest, k
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return [1]
    a = <int *> malloc((n + 1) * sizeof(int))
    hist = <long long *> malloc((n + 1) * sizeof(long long))
    if a == NULL or hist == NULL:
        free(a)
        free(hist)
        raise MemoryError()
    try:
        for k in range(n + 1):
            hist[k] = 0
            a[k] = 0
        a[0] = n
        m = 1
        while True:
            hist[a[0]] += 1
            ones = 0
            while m > 0 and a[m - 1] == 1:
                ones += 1
                m -= 1
            if m == 0:
                break
            a[m - 1] -= 1
            part = a[m - 1]
            rest = ones + 1
            while rest > part:
                a[m] = part
                m += 1
                rest -= part
            a[m] = rest
            m += 1
        return [hist[k] for k in range(n + 1)]
    finally:
        free(a)
        free(hist)
