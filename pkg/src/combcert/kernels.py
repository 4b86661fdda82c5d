"""Enumeration kernels, compiled when available.

``BACKEND`` names the implementation picked at import: ``"cython"`` if the
extension built, otherwise ``"python"``. Both modules stay importable so
tests and the benchmark can compare them directly.
"""

from . import _kernels_py as python_backend

try:
    from . import _kernels as compiled_backend
except ImportError:  # extension not built
    compiled_backend = None

_active = compiled_backend if compiled_backend is not None else python_backend
BACKEND = "cython" if compiled_backend is not None else "python"

count_rooted_trees = _active.count_rooted_trees
count_rooted_forests = _active.count_rooted_forests
largest_part_histogram = _active.largest_part_histogram

__all__ = [
    "BACKEND",
    "compiled_backend",
    "python_backend",
    "count_rooted_trees",
    "count_rooted_forests",
    "largest_part_histogram",
]
