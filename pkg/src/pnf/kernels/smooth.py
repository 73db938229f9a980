"""Separable valid-mode smoothing used by the speckle synthesizer.

The caller supplies a noise field that already includes a ``radius``-wide
apron on every side, so no boundary padding policy is needed: both passes
run in valid mode and the output loses ``2 * radius`` per axis. Both
backends accumulate taps in identical order, making them bit-identical.
"""
from __future__ import annotations

import numpy as np

from ._backend import numba_available, use_numba


def _smooth_valid_loops(field, kernel):
    k = kernel.shape[0]
    in_h, in_w = field.shape
    out_h = in_h - (k - 1)
    out_w = in_w - (k - 1)
    tmp = np.zeros((in_h, out_w), dtype=field.dtype)
    for a in range(in_h):
        for b in range(out_w):
            acc = 0.0
            for j in range(k):
                acc += kernel[j] * field[a, b + j]
            tmp[a, b] = acc
    out = np.zeros((out_h, out_w), dtype=field.dtype)
    for a in range(out_h):
        for b in range(out_w):
            acc = 0.0
            for i in range(k):
                acc += kernel[i] * tmp[a + i, b]
            out[a, b] = acc
    return out


def _smooth_valid_numpy(field: np.ndarray, kernel: np.ndarray) -> np.ndarray:
    k = kernel.shape[0]
    out_h = field.shape[0] - (k - 1)
    out_w = field.shape[1] - (k - 1)
    tmp = np.zeros((field.shape[0], out_w), dtype=field.dtype)
    for j in range(k):
        tmp += kernel[j] * field[:, j : j + out_w]
    out = np.zeros((out_h, out_w), dtype=field.dtype)
    for i in range(k):
        out += kernel[i] * tmp[i : i + out_h, :]
    return out


if numba_available():
    from numba import njit

    _smooth_valid_numba = njit(cache=True)(_smooth_valid_loops)
else:  # pragma: no cover
    _smooth_valid_numba = None


def smooth_valid(field: np.ndarray, kernel: np.ndarray) -> np.ndarray:
    """Smooth ``field`` with the 1D ``kernel`` along both axes, valid mode."""
    field = np.ascontiguousarray(field, dtype=np.float64)
    kernel = np.ascontiguousarray(kernel, dtype=np.float64)
    if use_numba():
        return _smooth_valid_numba(field, kernel)
    return _smooth_valid_numpy(field, kernel)


def gaussian_kernel(radius: int, sigma: float) -> np.ndarray:
    """Unit-energy (L2-normalized) Gaussian tap vector of length 2*radius+1.

    L2 normalization keeps the variance of smoothed white noise equal to the
    input variance, so the speckle generator's log-intensity spread stays at
    its configured value regardless of the smoothing radius.
    """
    x = np.arange(-radius, radius + 1, dtype=np.float64)
    k = np.exp(-0.5 * (x / sigma) ** 2)
    return k / np.sqrt(np.sum(k * k))
