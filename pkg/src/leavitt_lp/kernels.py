"""Kernel backend selection.

Prefers the compiled extension; falls back to the NumPy implementation
when the extension was not built. Both expose the same power_iterate
contract, so callers never notice which one is active.
"""

from __future__ import annotations

try:
    from . import _kernels as _impl  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover - depends on the build environment
    from . import _kernels_py as _impl

BACKEND: str = _impl.BACKEND
power_iterate = _impl.power_iterate


def available_backends() -> dict:
    """Map backend name -> power_iterate callable, for benchmarking."""
    out = {}
    try:
        from . import _kernels

        out["cython"] = _kernels.power_iterate
    except ImportError:
        pass
    from . import _kernels_py

    out["python"] = _kernels_py.power_iterate
    return out
