"""Complex double-double matrix kernels: product, determinant, solve, and the
evaluation of a formal sum of words in matrix generators.

Matrices are float64 arrays of shape ``(4, n, n)`` holding the planes
``re_hi, re_lo, im_hi, im_lo``; scalars are length-4 vectors.
"""

import numpy as np

from . import USE_NUMBA, njit
from .ddarith import cadd, cdiv, cmul

# ---- numba ------------------------------------------------------------------


@njit
def matmul_numba(a, b):
    n, m, k = a.shape[1], b.shape[2], a.shape[2]
    out = np.zeros((4, n, m))
    for i in range(n):
        for j in range(m):
            r0 = r1 = i0 = i1 = 0.0
            for t in range(k):
                p0, p1, p2, p3 = cmul(
                    a[0, i, t], a[1, i, t], a[2, i, t], a[3, i, t],
                    b[0, t, j], b[1, t, j], b[2, t, j], b[3, t, j],
                )
                r0, r1, i0, i1 = cadd(r0, r1, i0, i1, p0, p1, p2, p3)
            out[0, i, j] = r0
            out[1, i, j] = r1
            out[2, i, j] = i0
            out[3, i, j] = i1
    return out


@njit
def det_numba(m):
    a = m.copy()
    n = a.shape[1]
    d0, d1, d2, d3 = 1.0, 0.0, 0.0, 0.0
    for j in range(n):
        piv = j
        best = abs(a[0, j, j]) + abs(a[2, j, j])
        for i in range(j + 1, n):
            mag = abs(a[0, i, j]) + abs(a[2, i, j])
            if mag > best:
                best, piv = mag, i
        if best == 0.0:
            return np.zeros(4)
        if piv != j:
            for c in range(4):
                for col in range(n):
                    tmp = a[c, j, col]
                    a[c, j, col] = a[c, piv, col]
                    a[c, piv, col] = tmp
            d0, d1, d2, d3 = -d0, -d1, -d2, -d3
        p0, p1, p2, p3 = a[0, j, j], a[1, j, j], a[2, j, j], a[3, j, j]
        d0, d1, d2, d3 = cmul(d0, d1, d2, d3, p0, p1, p2, p3)
        for i in range(j + 1, n):
            f0, f1, f2, f3 = cdiv(a[0, i, j], a[1, i, j], a[2, i, j], a[3, i, j], p0, p1, p2, p3)
            for col in range(j + 1, n):
                g0, g1, g2, g3 = cmul(
                    f0, f1, f2, f3, a[0, j, col], a[1, j, col], a[2, j, col], a[3, j, col]
                )
                r0, r1, r2, r3 = cadd(
                    a[0, i, col], a[1, i, col], a[2, i, col], a[3, i, col], -g0, -g1, -g2, -g3
                )
                a[0, i, col] = r0
                a[1, i, col] = r1
                a[2, i, col] = r2
                a[3, i, col] = r3
    return np.array([d0, d1, d2, d3])


@njit
def solve_numba(m, rhs):
    """m^{-1} @ rhs by Gauss-Jordan elimination with partial pivoting."""
    a = m.copy()
    b = rhs.copy()
    n = a.shape[1]
    k = b.shape[2]
    for j in range(n):
        piv = j
        best = abs(a[0, j, j]) + abs(a[2, j, j])
        for i in range(j + 1, n):
            mag = abs(a[0, i, j]) + abs(a[2, i, j])
            if mag > best:
                best, piv = mag, i
        if best == 0.0:
            raise ZeroDivisionError("singular matrix")
        if piv != j:
            for c in range(4):
                for col in range(n):
                    tmp = a[c, j, col]
                    a[c, j, col] = a[c, piv, col]
                    a[c, piv, col] = tmp
                for col in range(k):
                    tmp = b[c, j, col]
                    b[c, j, col] = b[c, piv, col]
                    b[c, piv, col] = tmp
        p0, p1, p2, p3 = a[0, j, j], a[1, j, j], a[2, j, j], a[3, j, j]
        for col in range(n):
            r0, r1, r2, r3 = cdiv(a[0, j, col], a[1, j, col], a[2, j, col], a[3, j, col], p0, p1, p2, p3)
            a[0, j, col], a[1, j, col], a[2, j, col], a[3, j, col] = r0, r1, r2, r3
        for col in range(k):
            r0, r1, r2, r3 = cdiv(b[0, j, col], b[1, j, col], b[2, j, col], b[3, j, col], p0, p1, p2, p3)
            b[0, j, col], b[1, j, col], b[2, j, col], b[3, j, col] = r0, r1, r2, r3
        for i in range(n):
            if i == j:
                continue
            f0, f1, f2, f3 = a[0, i, j], a[1, i, j], a[2, i, j], a[3, i, j]
            for col in range(n):
                g0, g1, g2, g3 = cmul(f0, f1, f2, f3, a[0, j, col], a[1, j, col], a[2, j, col], a[3, j, col])
                r0, r1, r2, r3 = cadd(a[0, i, col], a[1, i, col], a[2, i, col], a[3, i, col], -g0, -g1, -g2, -g3)
                a[0, i, col], a[1, i, col], a[2, i, col], a[3, i, col] = r0, r1, r2, r3
            for col in range(k):
                g0, g1, g2, g3 = cmul(f0, f1, f2, f3, b[0, j, col], b[1, j, col], b[2, j, col], b[3, j, col])
                r0, r1, r2, r3 = cadd(b[0, i, col], b[1, i, col], b[2, i, col], b[3, i, col], -g0, -g1, -g2, -g3)
                b[0, i, col], b[1, i, col], b[2, i, col], b[3, i, col] = r0, r1, r2, r3
    return b


@njit
def word_sum_numba(coeffs, words, lengths, gens):
    """sum_k coeffs[k] * gens[words[k,0]] @ ... @ gens[words[k,len-1]]."""
    n = gens.shape[2]
    acc = np.zeros((4, n, n))
    for term in range(coeffs.shape[0]):
        prod = np.zeros((4, n, n))
        for i in range(n):
            prod[0, i, i] = 1.0
        for pos in range(lengths[term]):
            prod = matmul_numba(prod, gens[words[term, pos]])
        c = float(coeffs[term])
        for i in range(n):
            for j in range(n):
                p0, p1, p2, p3 = cmul(c, 0.0, 0.0, 0.0, prod[0, i, j], prod[1, i, j], prod[2, i, j], prod[3, i, j])
                r0, r1, r2, r3 = cadd(acc[0, i, j], acc[1, i, j], acc[2, i, j], acc[3, i, j], p0, p1, p2, p3)
                acc[0, i, j], acc[1, i, j], acc[2, i, j], acc[3, i, j] = r0, r1, r2, r3
    return acc


# ---- pure numpy -------------------------------------------------------------


def matmul_numpy(a, b):
    n, m, k = a.shape[1], b.shape[2], a.shape[2]
    acc = tuple(np.zeros((n, m)) for _ in range(4))
    for t in range(k):
        col = [a[c, :, t][:, None] for c in range(4)]
        row = [b[c, t, :][None, :] for c in range(4)]
        prod = cmul(*col, *row)
        acc = cadd(*acc, *prod)
    return np.array(acc)


def det_numpy(m):
    a = np.array(m, dtype=float, copy=True)
    n = a.shape[1]
    d = np.array([1.0, 0.0, 0.0, 0.0])
    for j in range(n):
        mags = np.abs(a[0, j:, j]) + np.abs(a[2, j:, j])
        piv = j + int(np.argmax(mags))
        if mags.max() == 0.0:
            return np.zeros(4)
        if piv != j:
            a[:, [j, piv], :] = a[:, [piv, j], :]
            d = -d
        p = a[:, j, j].copy()
        d = np.array(cmul(*d, *p))
        if j + 1 < n:
            f = cdiv(*[a[c, j + 1 :, j] for c in range(4)], *p)
            f = [x[:, None] for x in f]
            g = cmul(*f, *[a[c, j, j + 1 :][None, :] for c in range(4)])
            sub = [a[c, j + 1 :, j + 1 :] for c in range(4)]
            r = cadd(*sub, -g[0], -g[1], -g[2], -g[3])
            for c in range(4):
                a[c, j + 1 :, j + 1 :] = r[c]
    return d


def solve_numpy(m, rhs):
    a = np.array(m, dtype=float, copy=True)
    b = np.array(rhs, dtype=float, copy=True)
    n = a.shape[1]
    for j in range(n):
        mags = np.abs(a[0, j:, j]) + np.abs(a[2, j:, j])
        if mags.max() == 0.0:
            raise ZeroDivisionError("singular matrix")
        piv = j + int(np.argmax(mags))
        if piv != j:
            a[:, [j, piv], :] = a[:, [piv, j], :]
            b[:, [j, piv], :] = b[:, [piv, j], :]
        p = a[:, j, j].copy()
        a[:, j, :] = np.array(cdiv(*a[:, j, :], *p))
        b[:, j, :] = np.array(cdiv(*b[:, j, :], *p))
        others = np.array([i for i in range(n) if i != j], dtype=int)
        if others.size:
            f = [a[c, others, j][:, None] for c in range(4)]
            ga = cmul(*f, *[a[c, j, :][None, :] for c in range(4)])
            gb = cmul(*f, *[b[c, j, :][None, :] for c in range(4)])
            ra = cadd(*[a[c][others] for c in range(4)], *[-x for x in ga])
            rb = cadd(*[b[c][others] for c in range(4)], *[-x for x in gb])
            for c in range(4):
                a[c, others] = ra[c]
                b[c, others] = rb[c]
    return b


def word_sum_numpy(coeffs, words, lengths, gens):
    n = gens.shape[2]
    acc = np.zeros((4, n, n))
    eye = np.zeros((4, n, n))
    eye[0] = np.eye(n)
    for term in range(len(coeffs)):
        prod = eye
        for pos in range(int(lengths[term])):
            prod = matmul_numpy(prod, gens[words[term, pos]])
        c = float(coeffs[term])
        acc = np.array(cadd(*acc, *cmul(c, 0.0, 0.0, 0.0, *prod)))
    return acc


if USE_NUMBA:
    matmul, det, solve, word_sum = matmul_numba, det_numba, solve_numba, word_sum_numba
else:
    matmul, det, solve, word_sum = matmul_numpy, det_numpy, solve_numpy, word_sum_numpy


def inverse(m):
    n = m.shape[1]
    eye = np.zeros((4, n, n))
    eye[0] = np.eye(n)
    return solve(m, eye)
