"""Kernel backend selection.

The compiled extension is preferred when importable; the pure-numpy module
is the fallback. HYBRIDCOLOR_KERNELS={auto,cython,python} overrides the
choice at import time, and callers that want a specific backend in-process
(cross-checking, benchmarks) can fetch one with get_kernels().
"""

from __future__ import annotations

import os

from . import _kernels_py

_BACKENDS = {"python": _kernels_py}
try:
    from . import _kernels  # compiled extension, absent on pure installs

    _BACKENDS["cython"] = _kernels
except ImportError:
    pass


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def get_kernels(name: str = "auto"):
    """Kernel module by name; 'auto' prefers the compiled extension."""
    if name == "auto":
        return _BACKENDS.get("cython", _kernels_py)
    try:
        return _BACKENDS[name]
    except KeyError:
        raise ValueError(
            f"kernel backend {name!r} not available (have: {', '.join(available_backends())})"
        ) from None


kernels = get_kernels(os.environ.get("HYBRIDCOLOR_KERNELS", "auto"))


def backend_name() -> str:
    return kernels.NAME
