"""Numba-accelerated pixel kernels with a pure-numpy fallback.

``PNF_NO_NUMBA=1`` in the environment selects the numpy path for the whole
process; ``set_backend`` switches it at runtime. ``benchmarks/bench_kernels.py``
times the two paths against each other.
"""
from ._backend import get_backend, numba_available, set_backend, use_numba
from .conv import (
    conv3x3_backward,
    conv3x3_forward,
    convt2x2_backward,
    convt2x2_forward,
)
from .resize import bilinear_resize, nearest_resize
from .smooth import gaussian_kernel, smooth_valid

__all__ = [
    "get_backend",
    "set_backend",
    "use_numba",
    "numba_available",
    "bilinear_resize",
    "nearest_resize",
    "smooth_valid",
    "gaussian_kernel",
    "conv3x3_forward",
    "conv3x3_backward",
    "convt2x2_forward",
    "convt2x2_backward",
]
