"""Counting kernels, with a compiled core and a pure-Python fallback.

The compiled extension is optional: when the build skipped it (no
compiler, no Cython) the pure backend is selected at import time and the
package behaves identically, only slower on the big tableau sweeps.
``benchmarks/bench_kernels.py`` compares the two.
"""

from . import _lr_py

try:
    from . import _lr_cy
except ImportError:  # pragma: no cover - depends on the build environment
    _lr_cy = None

BACKEND = "cython" if _lr_cy is not None else "python"


def count_lr(outer, inner, content, limit=0):
    """Dispatch to the fastest available backend."""
    if _lr_cy is not None:
        try:
            return _lr_cy.count_lr(outer, inner, content, limit)
        except OverflowError:
            pass  # larger than the compiled buffers; fall through
    return _lr_py.count_lr(outer, inner, content, limit)


def backends() -> dict[str, object]:
    """Importable backends keyed by name (pure one is always present)."""
    found = {"python": _lr_py.count_lr}
    if _lr_cy is not None:
        found["cython"] = _lr_cy.count_lr
    return found
