"""Image resampling kernels.

Bilinear resize uses the half-pixel-centers convention (the source
coordinate of output pixel ``i`` is ``(i + 0.5) * scale - 0.5``, clamped to
the source extent). Masks resize with nearest-neighbor so binary values are
preserved. Both backends compute the interpolation weights in float64 and
round once when storing, so their outputs are bit-identical.
"""
from __future__ import annotations

import numpy as np

from ._backend import numba_available, use_numba


def _bilinear_loops(src, out):
    in_h, in_w = src.shape
    out_h, out_w = out.shape
    scale_y = in_h / out_h
    scale_x = in_w / out_w
    for i in range(out_h):
        sy = (i + 0.5) * scale_y - 0.5
        if sy < 0.0:
            sy = 0.0
        if sy > in_h - 1:
            sy = in_h - 1.0
        y0 = int(sy)
        y1 = min(y0 + 1, in_h - 1)
        fy = sy - y0
        for j in range(out_w):
            sx = (j + 0.5) * scale_x - 0.5
            if sx < 0.0:
                sx = 0.0
            if sx > in_w - 1:
                sx = in_w - 1.0
            x0 = int(sx)
            x1 = min(x0 + 1, in_w - 1)
            fx = sx - x0
            top = (1.0 - fx) * src[y0, x0] + fx * src[y0, x1]
            bot = (1.0 - fx) * src[y1, x0] + fx * src[y1, x1]
            out[i, j] = (1.0 - fy) * top + fy * bot
    return out


def _source_coords(n_in: int, n_out: int):
    s = (np.arange(n_out, dtype=np.float64) + 0.5) * (n_in / n_out) - 0.5
    s = np.clip(s, 0.0, n_in - 1)
    lo = s.astype(np.int64)
    hi = np.minimum(lo + 1, n_in - 1)
    frac = s - lo
    return lo, hi, frac


def _bilinear_numpy(src: np.ndarray, out: np.ndarray) -> np.ndarray:
    y0, y1, fy = _source_coords(src.shape[0], out.shape[0])
    x0, x1, fx = _source_coords(src.shape[1], out.shape[1])
    top = (1.0 - fx) * src[np.ix_(y0, x0)] + fx * src[np.ix_(y0, x1)]
    bot = (1.0 - fx) * src[np.ix_(y1, x0)] + fx * src[np.ix_(y1, x1)]
    out[:] = (1.0 - fy)[:, None] * top + fy[:, None] * bot
    return out


if numba_available():
    from numba import njit

    _bilinear_numba = njit(cache=True)(_bilinear_loops)
else:  # pragma: no cover - exercised only without numba installed
    _bilinear_numba = None


def bilinear_resize(src: np.ndarray, out_h: int, out_w: int) -> np.ndarray:
    """Resize a 2D float array to ``(out_h, out_w)`` with bilinear sampling."""
    src = np.ascontiguousarray(src)
    out = np.empty((out_h, out_w), dtype=src.dtype)
    if use_numba():
        return _bilinear_numba(src, out)
    return _bilinear_numpy(src, out)


def nearest_resize(src: np.ndarray, out_h: int, out_w: int) -> np.ndarray:
    """Resize a 2D array to ``(out_h, out_w)`` with nearest-neighbor sampling."""
    iy = np.minimum(((np.arange(out_h) + 0.5) * (src.shape[0] / out_h)).astype(np.int64), src.shape[0] - 1)
    ix = np.minimum(((np.arange(out_w) + 0.5) * (src.shape[1] / out_w)).astype(np.int64), src.shape[1] - 1)
    return src[np.ix_(iy, ix)]
