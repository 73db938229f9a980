"""Convolution kernels for the decoder's upsampling path.

Two shapes only, matching the heatmap head: a stride-2 transposed
convolution with a 2x2 kernel (each input pixel paints a 2x2 output block)
and a stride-1 same-padded 3x3 convolution (the final refinement). Forward
and backward are explicit so the autodiff layer can wrap them as fused ops.

Layouts: activations ``(B, C, H, W)``; transposed-conv weights
``(C_in, C_out, 2, 2)``; 3x3 weights ``(C_out, C_in, 3, 3)``.
"""
from __future__ import annotations

import numpy as np

from ._backend import numba_available, use_numba


# -- stride-2 2x2 transposed convolution -------------------------------------

def _convt2x2_fwd_loops(x, w, bias):
    b_n, c_in, h, wd = x.shape
    c_out = w.shape[1]
    out = np.empty((b_n, c_out, 2 * h, 2 * wd), dtype=x.dtype)
    for b in range(b_n):
        for o in range(c_out):
            for i in range(h):
                for j in range(wd):
                    a00 = bias[o]
                    a01 = bias[o]
                    a10 = bias[o]
                    a11 = bias[o]
                    for c in range(c_in):
                        v = x[b, c, i, j]
                        a00 += v * w[c, o, 0, 0]
                        a01 += v * w[c, o, 0, 1]
                        a10 += v * w[c, o, 1, 0]
                        a11 += v * w[c, o, 1, 1]
                    out[b, o, 2 * i, 2 * j] = a00
                    out[b, o, 2 * i, 2 * j + 1] = a01
                    out[b, o, 2 * i + 1, 2 * j] = a10
                    out[b, o, 2 * i + 1, 2 * j + 1] = a11
    return out


def _convt2x2_fwd_numpy(x, w, bias):
    b_n, c_in, h, wd = x.shape
    c_out = w.shape[1]
    flat = x.transpose(0, 2, 3, 1).reshape(-1, c_in)
    prod = flat @ w.reshape(c_in, c_out * 4)
    prod = prod.reshape(b_n, h, wd, c_out, 2, 2).transpose(0, 3, 1, 4, 2, 5)
    out = prod.reshape(b_n, c_out, 2 * h, 2 * wd) + bias[None, :, None, None]
    return np.ascontiguousarray(out)


def _convt2x2_bwd_loops(x, w, g):
    b_n, c_in, h, wd = x.shape
    c_out = w.shape[1]
    gx = np.zeros_like(x)
    gw = np.zeros_like(w)
    gb = np.zeros(c_out, dtype=x.dtype)
    for b in range(b_n):
        for o in range(c_out):
            for i in range(h):
                for j in range(wd):
                    g00 = g[b, o, 2 * i, 2 * j]
                    g01 = g[b, o, 2 * i, 2 * j + 1]
                    g10 = g[b, o, 2 * i + 1, 2 * j]
                    g11 = g[b, o, 2 * i + 1, 2 * j + 1]
                    gb[o] += g00 + g01 + g10 + g11
                    for c in range(c_in):
                        v = x[b, c, i, j]
                        gx[b, c, i, j] += (
                            g00 * w[c, o, 0, 0]
                            + g01 * w[c, o, 0, 1]
                            + g10 * w[c, o, 1, 0]
                            + g11 * w[c, o, 1, 1]
                        )
                        gw[c, o, 0, 0] += v * g00
                        gw[c, o, 0, 1] += v * g01
                        gw[c, o, 1, 0] += v * g10
                        gw[c, o, 1, 1] += v * g11
    return gx, gw, gb


def _convt2x2_bwd_numpy(x, w, g):
    b_n, c_in, h, wd = x.shape
    c_out = w.shape[1]
    gview = (
        g.reshape(b_n, c_out, h, 2, wd, 2)
        .transpose(0, 2, 4, 1, 3, 5)
        .reshape(-1, c_out * 4)
    )
    gx = (gview @ w.reshape(c_in, c_out * 4).T).reshape(b_n, h, wd, c_in)
    gx = np.ascontiguousarray(gx.transpose(0, 3, 1, 2))
    flat = x.transpose(0, 2, 3, 1).reshape(-1, c_in)
    gw = (flat.T @ gview).reshape(c_in, c_out, 2, 2)
    gb = g.sum(axis=(0, 2, 3))
    return gx, gw, gb


# -- stride-1 same-padded 3x3 convolution -------------------------------------

def _conv3x3_fwd_loops(x, w, bias):
    b_n, c_in, h, wd = x.shape
    c_out = w.shape[0]
    out = np.empty((b_n, c_out, h, wd), dtype=x.dtype)
    for b in range(b_n):
        for o in range(c_out):
            for i in range(h):
                for j in range(wd):
                    acc = bias[o]
                    for c in range(c_in):
                        for p in range(3):
                            ii = i + p - 1
                            if ii < 0 or ii >= h:
                                continue
                            for q in range(3):
                                jj = j + q - 1
                                if jj < 0 or jj >= wd:
                                    continue
                                acc += x[b, c, ii, jj] * w[o, c, p, q]
                    out[b, o, i, j] = acc
    return out


def _pad1(x):
    b_n, c, h, wd = x.shape
    out = np.zeros((b_n, c, h + 2, wd + 2), dtype=x.dtype)
    out[:, :, 1:-1, 1:-1] = x
    return out


def _conv3x3_fwd_numpy(x, w, bias):
    b_n, c_in, h, wd = x.shape
    c_out = w.shape[0]
    xp = _pad1(x)
    out = np.empty((b_n, c_out, h, wd), dtype=x.dtype)
    out[:] = bias[None, :, None, None]
    for p in range(3):
        for q in range(3):
            tap = xp[:, :, p : p + h, q : q + wd]
            out += np.einsum("bchw,oc->bohw", tap, w[:, :, p, q], optimize=True)
    return out


def _conv3x3_bwd_loops(x, w, g):
    b_n, c_in, h, wd = x.shape
    c_out = w.shape[0]
    gx = np.zeros_like(x)
    gw = np.zeros_like(w)
    gb = np.zeros(c_out, dtype=x.dtype)
    for b in range(b_n):
        for o in range(c_out):
            for i in range(h):
                for j in range(wd):
                    gv = g[b, o, i, j]
                    gb[o] += gv
                    for c in range(c_in):
                        for p in range(3):
                            ii = i + p - 1
                            if ii < 0 or ii >= h:
                                continue
                            for q in range(3):
                                jj = j + q - 1
                                if jj < 0 or jj >= wd:
                                    continue
                                gx[b, c, ii, jj] += gv * w[o, c, p, q]
                                gw[o, c, p, q] += x[b, c, ii, jj] * gv
    return gx, gw, gb


def _conv3x3_bwd_numpy(x, w, g):
    b_n, c_in, h, wd = x.shape
    xp = _pad1(x)
    gxp = np.zeros_like(xp)
    gw = np.zeros_like(w)
    for p in range(3):
        for q in range(3):
            tap = xp[:, :, p : p + h, q : q + wd]
            gw[:, :, p, q] = np.einsum("bohw,bchw->oc", g, tap, optimize=True)
            gxp[:, :, p : p + h, q : q + wd] += np.einsum(
                "bohw,oc->bchw", g, w[:, :, p, q], optimize=True
            )
    gx = np.ascontiguousarray(gxp[:, :, 1:-1, 1:-1])
    gb = g.sum(axis=(0, 2, 3))
    return gx, gw, gb


if numba_available():
    from numba import njit

    _convt2x2_fwd_numba = njit(cache=True)(_convt2x2_fwd_loops)
    _convt2x2_bwd_numba = njit(cache=True)(_convt2x2_bwd_loops)
    _conv3x3_fwd_numba = njit(cache=True)(_conv3x3_fwd_loops)
    _conv3x3_bwd_numba = njit(cache=True)(_conv3x3_bwd_loops)
else:  # pragma: no cover
    _convt2x2_fwd_numba = None
    _convt2x2_bwd_numba = None
    _conv3x3_fwd_numba = None
    _conv3x3_bwd_numba = None


def convt2x2_forward(x: np.ndarray, w: np.ndarray, bias: np.ndarray) -> np.ndarray:
    if use_numba():
        return _convt2x2_fwd_numba(x, w, bias)
    return _convt2x2_fwd_numpy(x, w, bias)


def convt2x2_backward(x: np.ndarray, w: np.ndarray, g: np.ndarray):
    if use_numba():
        return _convt2x2_bwd_numba(x, w, np.ascontiguousarray(g))
    return _convt2x2_bwd_numpy(x, w, g)


def conv3x3_forward(x: np.ndarray, w: np.ndarray, bias: np.ndarray) -> np.ndarray:
    if use_numba():
        return _conv3x3_fwd_numba(x, w, bias)
    return _conv3x3_fwd_numpy(x, w, bias)


def conv3x3_backward(x: np.ndarray, w: np.ndarray, g: np.ndarray):
    if use_numba():
        return _conv3x3_bwd_numba(x, w, np.ascontiguousarray(g))
    return _conv3x3_bwd_numpy(x, w, g)
