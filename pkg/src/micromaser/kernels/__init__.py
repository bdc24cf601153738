"""Hot kernels for density-entry sweeps, with backend selection at import.

The compiled Cython extension ``_fast`` is preferred when present; the
numpy implementation ``_ref`` is the always-available fallback.  Both
expose the same two functions with identical semantics.
"""

from __future__ import annotations

from . import _ref

try:
    from . import _fast
except ImportError:
    _fast = None

_impl = _fast if _fast is not None else _ref

__all__ = ["eg_entries", "ee_entries", "backend_name"]


def backend_name() -> str:
    """Which backend serves the kernel calls: 'compiled' or 'python'."""
    return "compiled" if _impl is _fast else "python"


def eg_entries(ns, ws, ts, chi, r, stark):
    """Excited-ground entries over a time grid; see kernels._ref.eg_entries."""
    return _impl.eg_entries(ns, ws, ts, chi, r, stark)


def ee_entries(ns, ws, ts, chi, r, stark):
    """Excited-excited entries over a time grid; see kernels._ref.ee_entries."""
    return _impl.ee_entries(ns, ws, ts, chi, r, stark)
