"""Kernel backend selection.

Hot pixel kernels ship in two functionally equivalent implementations: a
numba ``@njit`` version (default) and a pure-numpy fallback. The fallback is
selected by setting the environment variable ``PNF_NO_NUMBA=1`` before
import, or at runtime via :func:`set_backend` (used by tests and the
benchmark harness).
"""
from __future__ import annotations

import os

try:
    import numba  # noqa: F401

    _NUMBA_AVAILABLE = True
except ImportError:
    _NUMBA_AVAILABLE = False

_ENV_DISABLED = os.environ.get("PNF_NO_NUMBA", "").lower() in ("1", "true", "yes")

_BACKEND = "numpy" if (_ENV_DISABLED or not _NUMBA_AVAILABLE) else "numba"


def numba_available() -> bool:
    return _NUMBA_AVAILABLE


def get_backend() -> str:
    return _BACKEND


def set_backend(name: str) -> None:
    """Switch kernel dispatch to ``"numba"`` or ``"numpy"``."""
    global _BACKEND
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown kernel backend {name!r}")
    if name == "numba" and not _NUMBA_AVAILABLE:
        raise ValueError("numba backend requested but numba is not importable")
    _BACKEND = name


def use_numba() -> bool:
    return _BACKEND == "numba"
