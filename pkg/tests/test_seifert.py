import mpmath
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from torustap.cyclo import CyclotomicNumber, RootExponent
from torustap.seifert import (
    CertificateMismatch,
    SeifertIndex,
    SeifertRepData,
    mu_nu,
    parse_seifert_index,
    random_seifert_input,
    seifert_integrality_certificate,
    seifert_torsion,
    valid_eigen_exponents,
)

HAND = (SeifertIndex(0, 1, ((2, 1),)), SeifertRepData(2, 1, ((RootExponent(4, 1), RootExponent(4, 3)),)))


def test_mu_nu():
    assert mu_nu(3, 1) == (1, 0)
    assert mu_nu(2, 1) == (1, 0)
    assert mu_nu(5, 3) == (2, 1)
    with pytest.raises(ValueError):
        mu_nu(4, 2)


def test_parse():
    idx = parse_seifert_index("0,1;(2,1),(3,-1)")
    assert idx == SeifertIndex(0, 1, ((2, 1), (3, -1)))
    assert parse_seifert_index("{-1,(o,2);(5,3)}") == SeifertIndex(-1, 2, ((5, 3),))
    assert parse_seifert_index(str(idx)) == idx
    with pytest.raises(ValueError):
        parse_seifert_index("0,0;(2,1)")
    with pytest.raises(ValueError):
        parse_seifert_index("0,1;(2,1) junk")


def test_hand_case():
    tv = seifert_torsion(*HAND)
    assert tv.value == 2 and tv.acyclic
    ok, cert = seifert_integrality_certificate(*HAND)
    assert ok and cert.value == 2


def test_no_fibers():
    rep = SeifertRepData(3, 1, ())
    assert seifert_torsion(SeifertIndex(0, 1, ()), rep).value == 1
    tv = seifert_torsion(SeifertIndex(0, 2, ()), SeifertRepData(2, 1, ()))
    assert tv.value == 16
    ok, _ = seifert_integrality_certificate(SeifertIndex(0, 2, ()), SeifertRepData(2, 1, ()))
    assert ok


def test_trivial_omega_not_acyclic():
    rep = SeifertRepData(2, 0, ((RootExponent(4, 0), RootExponent(4, 2)),))
    tv = seifert_torsion(SeifertIndex(0, 1, ((2, 1),)), rep)
    assert tv.value == 0 and not tv.acyclic


def test_invalid_eigenvalues():
    rep = SeifertRepData(2, 1, ((RootExponent(4, 0), RootExponent(4, 1)),))
    with pytest.raises(ValueError):
        seifert_torsion(SeifertIndex(0, 1, ((2, 1),)), rep)


def test_fault_injection():
    with pytest.raises(CertificateMismatch):
        seifert_integrality_certificate(*HAND, direct=CyclotomicNumber.rational(3))


def test_rep_json_round_trip():
    _, rep = HAND
    assert SeifertRepData.from_json(rep.to_json()) == rep


def _float_torsion(index, rep):
    with mpmath.workprec(120):
        w = mpmath.expjpi(2 * mpmath.mpf(rep.omega_exp) / rep.n)
        val = (w - 1) ** (rep.n * (index.m + 2 * index.genus - 2))
        for (a, b), eigs in zip(index.fibers, rep.eigen_exps):
            mu, nu = mu_nu(a, b)
            for e in eigs:
                x = w**nu * mpmath.expjpi(2 * mpmath.mpf(e.exponent) / e.order) ** mu
                val /= x - 1
        return val


@given(st.integers(0, 2**32 - 1))
def test_random_inputs(seed):
    index, rep = random_seifert_input(np.random.default_rng(seed))
    tv = seifert_torsion(index, rep)
    ok, cert = seifert_integrality_certificate(index, rep)
    assert ok and cert.agrees and tv.value.is_algebraic_integer()
    with mpmath.workprec(120):
        got, want = tv.value.embed(120), _float_torsion(index, rep)
        assert abs(got - want) < 1e-25 * max(1, abs(want))


@given(st.integers(2, 5), st.integers(0, 4), st.integers(2, 7), st.integers(-9, 9))
def test_valid_exponents(n, k, a, b):
    from math import gcd

    if gcd(a, b) != 1:
        return
    for x in valid_eigen_exponents(n, k % n, a, b):
        assert (RootExponent(n * a, x) ** a * RootExponent(n, k) ** b).is_one()
