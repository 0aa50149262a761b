from fractions import Fraction
from math import gcd

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from torustap.charvar import TorusKnot
from torustap.powersum import (
    KINDS,
    adjoint_neg_power_sum,
    adjoint_pos_power_sum,
    binomial_sum,
    full_sin_power_sum,
    odd_sin_power_sum,
    power_sum,
    powersum_grid,
    sl2_neg_power_sum,
    sl2_pos_power_sum,
    verlinde_rank,
)

from strategies import torus_knot_params


def eps(p):
    return p % 2


def trig_sum(angles, m):
    return mpmath.fsum((4 * mpmath.sin(x) ** 2) ** m for x in angles)


def check_close(frac, angles, m):
    with mpmath.workprec(120):
        want = trig_sum(angles, m)
        assert abs(mpmath.mpf(frac.numerator) / frac.denominator - want) < 1e-25 * max(1, want)


def test_odd_angle_examples():
    assert odd_sin_power_sum(2, 0) == (2, 2)
    assert odd_sin_power_sum(2, 1) == (4, 4)
    assert odd_sin_power_sum(3, 2) == (18, 18)


def test_full_angle_examples():
    assert full_sin_power_sum(2, 1) == (4, 4)
    assert full_sin_power_sum(3, 0)[0] == 2
    assert full_sin_power_sum(5, 1) == (10, 10)


def test_full_angle_counts_terms_at_zero():
    # p - 1 terms on the left; the binomial side gives p
    for p in range(2, 8):
        lhs, rhs = full_sin_power_sum(p, 0)
        assert (lhs, rhs) == (p - 1, p)


@pytest.mark.parametrize("p,m", [(4, 3), (7, 5), (9, 8)])
def test_lemma_lhs_against_floats(p, m):
    with mpmath.workprec(120):
        check_close(odd_sin_power_sum(p, m)[0], [a * mpmath.pi / (2 * p) for a in range(1, 2 * p, 2)], m)
        check_close(full_sin_power_sum(p, m)[0], [a * mpmath.pi / p for a in range(1, p)], m)


def test_verlinde_examples():
    assert verlinde_rank(7, -1) == 1
    assert verlinde_rank(3, 0) == 1
    assert verlinde_rank(5, 1) == 5


@given(st.integers(3, 12), st.integers(-1, 5))
def test_verlinde_integral(p, m):
    assert verlinde_rank(p, m).denominator == 1


@given(st.sampled_from([3, 5, 7, 9, 11]), st.integers(-1, 5))
def test_verlinde_doubling(q, m):
    assert verlinde_rank(2 * q, m) == 2 ** (m + 1) * verlinde_rank(q, m)


def test_sl2_specials():
    r = sl2_neg_power_sum(2, 3, 1)
    assert r.closed_form == r.brute_force == Fraction(1, 2)
    r = sl2_pos_power_sum(2, 3, 1)
    assert r.closed_form == r.brute_force == 2
    r = sl2_pos_power_sum(2, 5, 1)
    assert r.agrees


@pytest.mark.parametrize("p,q", [(p, q) for p in range(2, 12) for q in range(p + 1, 12) if gcd(p, q) == 1])
def test_inverse_sums(p, q):
    want = (Fraction(p, 2) - eps(p)) * (Fraction(q, 2) - eps(q))
    r = sl2_neg_power_sum(p, q, 1)
    assert r.closed_form == r.brute_force == want
    r = sl2_pos_power_sum(p, q, -1)
    assert r.closed_form == r.brute_force == want
    r = adjoint_neg_power_sum(p, q, 1)
    assert r.closed_form == r.brute_force == 2


def test_adjoint_examples():
    assert adjoint_neg_power_sum(2, 3, 2).brute_force == 4
    assert adjoint_neg_power_sum(2, 3, 2).closed_form == 4
    r = adjoint_pos_power_sum(2, 3, 1)
    assert r.brute_force == Fraction(1, 2) and r.checks["gky"]
    for m in range(0, 7):
        r = adjoint_pos_power_sum(3, 5, m)
        assert r.passes and r.checks["odd_odd_even"] and (r.brute_force / 2).denominator == 1


def test_adjoint_neg_at_zero_counts_components():
    r = adjoint_neg_power_sum(2, 3, 0)
    assert r.brute_force == 1
    assert r.closed_form == Fraction(3)  # pq/2: the closed form does not reduce to the count


@given(torus_knot_params(2, 7), st.integers(1, 4), st.integers(-3, 3), st.integers(-2, 2))
def test_curve_scaling(pq, m, u, w):
    p, q = pq
    if u - p * q * w == 0:
        return
    r = adjoint_neg_power_sum(p, q, m, curve=(u, w))
    assert r.passes


def test_curve_degenerate():
    with pytest.raises(ValueError):
        adjoint_neg_power_sum(2, 3, 1, curve=(6, 1))


def test_dispatch_and_json():
    r = power_sum("adj-pos", 2, 5, 2)
    assert r.kind == "adjoint_pos"
    data = r.to_json()
    assert data["passes"] == r.passes and Fraction(data["closed_form"]) == r.closed_form
    with pytest.raises(ValueError):
        power_sum("nope", 2, 3, 1)


def test_binomial_sum():
    assert binomial_sum(3, 2, 4) == 6
    # |l| <= 1: C(6,0) + C(6,3) + C(6,6) with sign (-1)^l
    assert binomial_sum(3, 3, 1) == 20 - 2


def test_grid_shape():
    reps = powersum_grid(5, range(0, 2))
    assert {r.kind for r in reps} == set(KINDS)
    assert all(r.passes for r in reps if r.m == 1)
