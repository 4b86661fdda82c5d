import pytest

from combcert import kernels
from combcert.kernels import python_backend

# unlabeled rooted trees on 1..12 nodes, from explicit nested-tuple enumeration
ROOTED_TREES = [1, 1, 2, 4, 9, 20, 48, 115, 286, 719, 1842, 4766]


def backends():
    out = [pytest.param(python_backend, id="python")]
    if kernels.compiled_backend is not None:
        out.append(pytest.param(kernels.compiled_backend, id="cython"))
    return out


@pytest.mark.parametrize("backend", backends())
def test_rooted_trees(backend):
    assert [backend.count_rooted_trees(n) for n in range(1, 13)] == ROOTED_TREES
    assert backend.count_rooted_trees(0) == 0


@pytest.mark.parametrize("backend", backends())
def test_forests_shift(backend):
    assert backend.count_rooted_forests(0) == 1
    for n in range(12):
        assert backend.count_rooted_forests(n) == backend.count_rooted_trees(n + 1)


@pytest.mark.parametrize("backend", backends())
def test_histogram(backend):
    assert backend.largest_part_histogram(0) == [1]
    assert backend.largest_part_histogram(7) == [0, 1, 3, 4, 3, 2, 1, 1]
    assert sum(backend.largest_part_histogram(30)) == 5604


@pytest.mark.skipif(kernels.compiled_backend is None, reason="extension not built")
def test_backends_agree():
    c = kernels.compiled_backend
    for n in range(0, 15):
        assert c.count_rooted_forests(n) == python_backend.count_rooted_forests(n)
    for n in range(0, 40):
        assert c.largest_part_histogram(n) == python_backend.largest_part_histogram(n)


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")
    assert (kernels.BACKEND == "cython") == (kernels.compiled_backend is not None)


def test_fallback_selected_without_extension(monkeypatch):
    import importlib
    import sys

    import combcert

    monkeypatch.setitem(sys.modules, "combcert._kernels", None)  # makes the import fail
    monkeypatch.delattr(combcert, "_kernels", raising=False)
    try:
        reloaded = importlib.reload(kernels)
        assert reloaded.BACKEND == "python"
        assert reloaded.compiled_backend is None
        assert reloaded.count_rooted_forests(6) == 48
    finally:
        monkeypatch.undo()
        importlib.reload(kernels)
