"""Backend selection: compiled Cython kernels when available, else pure Python."""

from importlib import import_module
from types import ModuleType

try:
    from . import _kernel_cy as _impl  # type: ignore[attr-defined]

    BACKEND = "cython"
except ImportError:
    from . import _kernel_py as _impl

    BACKEND = "python"

STATUS_OK = 0
STATUS_BUDGET = 1

steiner_max_packing = _impl.steiner_max_packing
spanning_max_packing = _impl.spanning_max_packing
canonical_rows = _impl.canonical_rows
nw_max_trees = _impl.nw_max_trees
nw_first_violation = _impl.nw_first_violation
max_trees_by_edges = _impl.max_trees_by_edges


def available_backends() -> list[str]:
    names = ["python"]
    try:
        import_module("steinerpack._kernel_cy")
        names.insert(0, "cython")
    except ImportError:
        pass
    return names


def load_backend(name: str) -> ModuleType:
    """Explicitly load one backend module (used by tests and benchmarks)."""
    if name == "python":
        return import_module("steinerpack._kernel_py")
    if name == "cython":
        return import_module("steinerpack._kernel_cy")
    raise ValueError(f"unknown backend {name!r}")
