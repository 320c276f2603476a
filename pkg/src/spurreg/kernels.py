"""Kernel backend selection.

The compiled extension is preferred when present; the pure-Python twin is
the fallback. Both implement identical algorithms and produce bit-identical
streams, so the choice only affects speed. Override with the environment
variable ``SPURREG_BACKEND=python`` or ``SPURREG_BACKEND=cython``.
"""

from __future__ import annotations

import os

from spurreg import _kernel_py


def _load(name: str):
    if name == "python":
        return _kernel_py
    if name == "cython":
        from spurreg import _kernel_cy

        return _kernel_cy
    raise ValueError(f"unknown kernel backend {name!r} (use 'python' or 'cython')")


_forced = os.environ.get("SPURREG_BACKEND")
if _forced:
    _impl = _load(_forced)
else:
    try:
        from spurreg import _kernel_cy as _impl
    except ImportError:
        _impl = _kernel_py

BACKEND: str = _impl.BACKEND
Rng = _impl.Rng


def available_backends() -> list[str]:
    """Names of importable backends, preferred first."""
    names = []
    try:
        _load("cython")
        names.append("cython")
    except ImportError:
        pass
    names.append("python")
    return names


def get_backend(name: str):
    """Return a specific backend module (for benchmarks and equivalence tests)."""
    return _load(name)
