"""Double-double arithmetic (about 106 significand bits, ~32 decimal digits).

A real double-double is an unevaluated sum ``hi + lo`` with ``|lo| <= ulp(hi)/2``.
A complex double-double is the 4-tuple ``(re_hi, re_lo, im_hi, im_lo)``.

The primitives use plain arithmetic only, so they work elementwise on numpy
arrays as well as on floats, and numba kernels can call them directly.
"""

import mpmath
import numpy as np

from . import jitable

_SPLITTER = 134217729.0  # 2^27 + 1


@jitable
def two_sum(a, b):
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


@jitable
def quick_two_sum(a, b):
    s = a + b
    err = b - (s - a)
    return s, err


@jitable
def split(a):
    t = _SPLITTER * a
    hi = t - (t - a)
    return hi, a - hi


@jitable
def two_prod(a, b):
    p = a * b
    ah, al = split(a)
    bh, bl = split(b)
    err = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, err


@jitable
def dd_add(ah, al, bh, bl):
    s, e = two_sum(ah, bh)
    t, f = two_sum(al, bl)
    e = e + t
    s, e = quick_two_sum(s, e)
    e = e + f
    return quick_two_sum(s, e)


@jitable
def dd_mul(ah, al, bh, bl):
    p, e = two_prod(ah, bh)
    e = e + (ah * bl + al * bh)
    return quick_two_sum(p, e)


@jitable
def dd_div(ah, al, bh, bl):
    q1 = ah / bh
    ph, pl = dd_mul(q1, 0.0 * q1, bh, bl)
    rh, rl = dd_add(ah, al, -ph, -pl)
    q2 = rh / bh
    ph, pl = dd_mul(q2, 0.0 * q2, bh, bl)
    rh, rl = dd_add(rh, rl, -ph, -pl)
    q3 = rh / bh
    q1, q2 = quick_two_sum(q1, q2)
    return dd_add(q1, q2, q3, 0.0 * q3)


@jitable
def cadd(a0, a1, a2, a3, b0, b1, b2, b3):
    r0, r1 = dd_add(a0, a1, b0, b1)
    i0, i1 = dd_add(a2, a3, b2, b3)
    return r0, r1, i0, i1


@jitable
def cmul(a0, a1, a2, a3, b0, b1, b2, b3):
    p0, p1 = dd_mul(a0, a1, b0, b1)
    q0, q1 = dd_mul(a2, a3, b2, b3)
    r0, r1 = dd_add(p0, p1, -q0, -q1)
    p0, p1 = dd_mul(a0, a1, b2, b3)
    q0, q1 = dd_mul(a2, a3, b0, b1)
    i0, i1 = dd_add(p0, p1, q0, q1)
    return r0, r1, i0, i1


@jitable
def cdiv(a0, a1, a2, a3, b0, b1, b2, b3):
    n0, n1, m0, m1 = cmul(a0, a1, a2, a3, b0, b1, -b2, -b3)
    s0, s1 = dd_mul(b0, b1, b0, b1)
    t0, t1 = dd_mul(b2, b3, b2, b3)
    d0, d1 = dd_add(s0, s1, t0, t1)
    r0, r1 = dd_div(n0, n1, d0, d1)
    i0, i1 = dd_div(m0, m1, d0, d1)
    return r0, r1, i0, i1


# ---- conversions (setup path, not hot) ------------------------------------


def from_mpc(z):
    """4-vector for an mpmath complex (or anything mpmath accepts)."""
    z = mpmath.mpc(z)
    rh = float(z.real)
    ih = float(z.imag)
    rl = float(z.real - rh)
    il = float(z.imag - ih)
    return np.array([rh, rl, ih, il])


def to_mpc(v):
    with mpmath.workprec(128):
        re = mpmath.mpf(float(v[0])) + mpmath.mpf(float(v[1]))
        im = mpmath.mpf(float(v[2])) + mpmath.mpf(float(v[3]))
        return mpmath.mpc(re, im)


def matrix_from_mp(rows):
    """(4, n, n) array from a nested list of mpmath complex entries."""
    n = len(rows)
    out = np.zeros((4, n, n))
    for i in range(n):
        for j in range(n):
            out[:, i, j] = from_mpc(rows[i][j])
    return out


def matrix_from_complex(m):
    m = np.asarray(m, dtype=complex)
    out = np.zeros((4,) + m.shape)
    out[0] = m.real
    out[2] = m.imag
    return out


def diagonal(entries):
    n = len(entries)
    out = np.zeros((4, n, n))
    for i, z in enumerate(entries):
        out[:, i, i] = from_mpc(z)
    return out


def identity(n):
    out = np.zeros((4, n, n))
    out[0] = np.eye(n)
    return out


def scale(z, m):
    """Scalar (4-vector) times a (4, n, n) matrix; numpy-vectorized."""
    return np.array(cmul(z[0], z[1], z[2], z[3], m[0], m[1], m[2], m[3]))


def from_complex(z):
    """Exact double-double planes of a complex float array (low parts zero)."""
    z = np.asarray(z, dtype=complex)
    zero = np.zeros(z.shape)
    return (z.real.copy(), zero, z.imag.copy(), zero.copy())


def cpow(z, k):
    """z**k for an integer k, elementwise on 4-tuples of arrays."""
    shape = np.shape(z[0])
    one = (np.ones(shape), np.zeros(shape), np.zeros(shape), np.zeros(shape))
    if k < 0:
        z = cdiv(*one, *z)
        k = -k
    result = one
    base = z
    while k:
        if k & 1:
            result = cmul(*result, *base)
        k >>= 1
        if k:
            base = cmul(*base, *base)
    return result


def to_complex(z):
    return (np.asarray(z[0]) + np.asarray(z[1])) + 1j * (np.asarray(z[2]) + np.asarray(z[3]))
