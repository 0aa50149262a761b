import os
import subprocess
import sys

import mpmath
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from torustap.cyclo import CyclotomicNumber, _field, root_of_unity
from torustap.kernels import binomial, ddarith as dd, ddlinalg
from torustap.laurent import LaurentPolynomial


@st.composite
def binomial_rows(draw):
    n = draw(st.sampled_from([1, 3, 4, 6, 10, 12]))
    rows = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(1, 4), st.integers(1, 3)), min_size=1, max_size=5))
    return n, np.array(rows, dtype=np.int64)


@given(binomial_rows())
def test_expand_backends_agree_with_laurent(case):
    n, rows = case
    a = binomial.expand_binomials_numba(rows, n)
    b = binomial.expand_binomials_numpy(rows, n)
    assert np.array_equal(a, b)
    red = _field(n).reduction_matrix()
    got = binomial.reduce_rows(a, red)
    want = LaurentPolynomial.one()
    for e, d, m in rows:
        want = want * LaurentPolynomial.binomial(root_of_unity(n, int(e)), int(d)) ** int(m)
    poly = LaurentPolynomial({i: CyclotomicNumber(n, [int(x) for x in row]) for i, row in enumerate(got)})
    assert poly == want


def _mp(z):
    return mpmath.mpc(z)


@given(st.complex_numbers(max_magnitude=1e3, allow_nan=False, allow_infinity=False),
       st.complex_numbers(max_magnitude=1e3, allow_nan=False, allow_infinity=False))
def test_dd_complex_ops(x, y):
    with mpmath.workprec(200):
        X = mpmath.mpc(x) + mpmath.mpc(x) * mpmath.mpf(2) ** -60 / 3
        Y = mpmath.mpc(y) + mpmath.mpf(1) / 7
        a, b = dd.from_mpc(X), dd.from_mpc(Y)
        for op, ref in [(dd.cadd, X + Y), (dd.cmul, X * Y)]:
            got = dd.to_mpc(np.array(op(*a, *b)))
            assert abs(got - ref) <= mpmath.mpf(2) ** -100 * (abs(X) + 1) * (abs(Y) + 1)
        if abs(Y) > 1e-3:
            got = dd.to_mpc(np.array(dd.cdiv(*a, *b)))
            assert abs(got - X / Y) <= mpmath.mpf(2) ** -98 * (abs(X / Y) + 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_det_and_solve(n):
    rng = np.random.default_rng(n)
    m = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    md = dd.matrix_from_complex(m)
    for det in (ddlinalg.det_numba, ddlinalg.det_numpy):
        got = dd.to_complex(det(md))
        assert abs(got - np.linalg.det(m)) < 1e-12 * abs(np.linalg.det(m))
    inv = ddlinalg.inverse(md)
    prod = ddlinalg.matmul(md, inv)
    assert np.allclose(dd.to_complex(tuple(prod)), np.eye(n), atol=1e-25)


def test_det_is_double_double_accurate():
    with mpmath.workprec(200):
        rows = [[mpmath.mpc(1) / (i + j + 1) for j in range(4)] for i in range(4)]  # Hilbert matrix
        want = mpmath.det(mpmath.matrix(rows))
        got = dd.to_mpc(np.asarray(ddlinalg.det(dd.matrix_from_mp(rows))))
        assert abs(got - want) < 1e-25 * abs(want)


def test_cpow_matches_power():
    z = np.array([1.1 + 0.3j, -0.7 + 0.2j])
    for k in (-3, 0, 1, 5):
        assert np.allclose(dd.to_complex(dd.cpow(dd.from_complex(z), k)), z**k, rtol=1e-14)


def test_backend_switch():
    env = dict(os.environ, TORUSTAP_DISABLE_NUMBA="1")
    out = subprocess.run(
        [sys.executable, "-c", "from torustap.kernels import BACKEND, binomial; print(BACKEND, binomial.expand_binomials.__name__)"],
        env=env, capture_output=True, text=True, check=True,
    ).stdout.split()
    assert out == ["numpy", "expand_binomials_numpy"]
