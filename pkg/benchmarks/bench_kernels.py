"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import timeit

from combcert import kernels
from combcert.kernels import compiled_backend, python_backend

CASES = [
    ("count_rooted_forests", n) for n in (10, 12, 14, 16)
] + [("largest_part_histogram", n) for n in (30, 45, 60)]


def best_of(fn, arg, repeat):
    return min(timeit.repeat(lambda: fn(arg), number=1, repeat=repeat))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    print(f"active backend: {kernels.BACKEND}")
    if compiled_backend is None:
        print("compiled extension not built; timing the Python fallback only")
    header = f"{'kernel':<24}{'n':>4}{'python s':>12}{'cython s':>12}{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for name, n in CASES:
        py = best_of(getattr(python_backend, name), n, args.repeat)
        if compiled_backend is None:
            print(f"{name:<24}{n:>4}{py:>12.4f}{'-':>12}{'-':>10}")
            continue
        fast_fn = getattr(compiled_backend, name)
        assert fast_fn(n) == getattr(python_backend, name)(n)
        cy = best_of(fast_fn, n, args.repeat)
        print(f"{name:<24}{n:>4}{py:>12.4f}{cy:>12.4f}{py / cy:>9.1f}x")


if __name__ == "__main__":
    main()
