"""Expansion of products of binomials (zeta^e t^d - 1) in Z[x]/(x^N - 1)[t].

A polynomial in t whose coefficients live in the group ring of Z/N is a 2-D
integer array ``A[deg_t, N]``.  Multiplying by ``zeta^e t^d - 1`` is a cyclic
roll along the second axis, a shift along the first, and a subtraction, so no
reduction modulo Phi_N happens until the very end (``reduce_rows``).

``factors`` is an int64 array with rows ``(e, d, multiplicity)``.
"""

import numpy as np

from . import USE_NUMBA, njit

# Each factor at most doubles the l1 norm; stay well clear of int64 overflow.
_INT64_FACTOR_LIMIT = 60


def total_degree(factors):
    factors = np.asarray(factors, dtype=np.int64).reshape(-1, 3)
    return int((factors[:, 1] * factors[:, 2]).sum())


def _expand_numpy(factors, n, dtype=np.int64):
    factors = np.asarray(factors, dtype=np.int64).reshape(-1, 3)
    deg = total_degree(factors)
    out = np.zeros((deg + 1, n), dtype=dtype)
    out[0, 0] = 1
    top = 0
    for e, d, mult in factors:
        e, d = int(e) % n, int(d)
        for _ in range(int(mult)):
            cur = out[: top + 1].copy()
            out[: top + 1] = -cur
            out[d : top + d + 1] += np.roll(cur, e, axis=1)
            top += d
    return out


@njit
def _expand_numba(factors, n):
    deg = 0
    for r in range(factors.shape[0]):
        deg += factors[r, 1] * factors[r, 2]
    out = np.zeros((deg + 1, n), dtype=np.int64)
    out[0, 0] = 1
    top = 0
    for r in range(factors.shape[0]):
        e = factors[r, 0] % n
        d = factors[r, 1]
        for _ in range(factors[r, 2]):
            # walk downward in t so each row is read before it is overwritten
            for i in range(top, -1, -1):
                for x in range(n):
                    c = out[i, x]
                    if c != 0:
                        out[i + d, (x + e) % n] += c
                        out[i, x] = -c
            top += d
    return out


def expand_binomials_numpy(factors, n):
    factors = np.asarray(factors, dtype=np.int64).reshape(-1, 3)
    dtype = np.int64 if factors[:, 2].sum() < _INT64_FACTOR_LIMIT else object
    return _expand_numpy(factors, n, dtype)


def expand_binomials_numba(factors, n):
    factors = np.ascontiguousarray(np.asarray(factors, dtype=np.int64).reshape(-1, 3))
    if factors[:, 2].sum() >= _INT64_FACTOR_LIMIT:
        return _expand_numpy(factors, n, object)
    return _expand_numba(factors, n)


expand_binomials = expand_binomials_numba if USE_NUMBA else expand_binomials_numpy


def reduce_rows(coeffs, reduction):
    """Map group-ring rows (length N) to power-basis rows via ``coeffs @ R``."""
    if coeffs.dtype != object and reduction.dtype != object:
        bound = int(np.abs(coeffs).max(initial=0)) * int(np.abs(reduction).max(initial=0))
        if bound * coeffs.shape[1] < 2**62:
            return coeffs @ reduction
    return coeffs.astype(object) @ reduction.astype(object)
