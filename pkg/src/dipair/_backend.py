"""Kernel backend selection.

DIPAIR_BACKEND=numba forces the jit kernels, =numpy the pure-numpy fallback;
the default (auto) uses numba when it imports and numpy otherwise.
"""

from __future__ import annotations

import os

_active = None
_requested = None


def _resolve(name: str):
    if name == "numpy":
        from . import _kernels_numpy
        return _kernels_numpy
    if name == "numba":
        from . import _kernels_numba
        return _kernels_numba
    if name == "auto":
        try:
            from . import _kernels_numba
            return _kernels_numba
        except ImportError:
            from . import _kernels_numpy
            return _kernels_numpy
    raise ValueError(f"unknown backend {name!r} (use auto, numba or numpy)")


def kernels():
    """The active kernel module."""
    global _active
    if _active is None:
        name = _requested or os.environ.get("DIPAIR_BACKEND", "auto")
        _active = _resolve(name)
    return _active


def set_backend(name: str | None):
    """Force a backend (tests/benchmarks); None returns to the env default."""
    global _active, _requested
    _requested = name
    _active = _resolve(name) if name else None


def backend_name() -> str:
    return kernels().NAME
