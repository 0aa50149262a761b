import pytest
from hypothesis import given
from hypothesis import strategies as st

from torustap.charvar import ComponentData, TorusKnot, enumerate_components
from torustap.cyclo import root_of_unity
from torustap.laurent import LaurentPolynomial
from torustap.tap import (
    expansion_sign,
    tap_closed_form,
    tap_max_dim,
    tap_polynomial,
    tap_polynomial_reference,
)

from strategies import torus_knot_params

T = LaurentPolynomial.monomial(1, 1)


def tpow(d):
    return LaurentPolynomial.monomial(1, d)


def max_dim(knot, n):
    return [c for c in enumerate_components(knot, n) if c.dimension() == (n - 1) ** 2]


def test_trefoil():
    knot = TorusKnot(2, 3)
    (c,) = enumerate_components(knot, 3)
    assert tap_polynomial(knot, c) == tpow(3) - 1


def test_k34_max_dim():
    knot = TorusKnot(3, 4)
    (c,) = max_dim(knot, 3)
    want = -(tpow(12) - 1) * (tpow(3) + 1)
    assert tap_polynomial(knot, c) == want
    assert tap_max_dim(knot, 3, c.k, c.a_set, c.b_set) == want


def test_k25_row():
    knot = TorusKnot(2, 5)
    (c,) = [c for c in enumerate_components(knot, 3) if c.k == 0 and c.b_set == frozenset({0, 2, 3})]
    z5 = root_of_unity(5, 1)
    want = (tpow(5) - 1) * (LaurentPolynomial.monomial(z5, 2) - 1) * (LaurentPolynomial.monomial(z5**4, 2) - 1)
    assert tap_polynomial(knot, c) == want


def test_closed_form_structure():
    knot = TorusKnot(2, 3)
    (c,) = enumerate_components(knot, 2)
    form = tap_closed_form(knot, c)
    (num,) = form.numerator_factors
    assert (num.t_power, num.multiplicity) == (6, 2)
    assert sorted(f.t_power for f in form.denominator_factors) == [2, 2, 3, 3]
    assert sum(f.multiplicity for f in form.denominator_factors) == 4


def test_k25_denominator_exponents():
    knot = TorusKnot(2, 5)
    (c,) = [c for c in enumerate_components(knot, 3) if c.k == 0 and c.b_set == frozenset({0, 1, 4})]
    form = tap_closed_form(knot, c)
    t2 = sorted(f.scalar.angle() * 5 for f in form.denominator_factors if f.t_power == 2)
    assert t2 == [0, 1, 4]


def test_max_dim_n2_has_no_leading_factor():
    knot = TorusKnot(2, 3)
    (c,) = enumerate_components(knot, 2)
    assert tap_max_dim(knot, 2, c.k, c.a_set, c.b_set) == tap_polynomial(knot, c)


def test_bad_inputs():
    knot = TorusKnot(2, 3)
    with pytest.raises(ValueError):
        tap_polynomial(TorusKnot(2, 5), enumerate_components(knot, 2)[0])
    with pytest.raises(ValueError):
        tap_max_dim(knot, 3, 0, {0, 1, 2}, {0, 1, 2})


@given(torus_knot_params(2, 7), st.integers(2, 4), st.data())
def test_closed_form_identity(pq, n, data):
    p, q = pq
    knot = TorusKnot(p, q)
    comps = enumerate_components(knot, n)
    if not comps:
        return
    c = data.draw(st.sampled_from(comps))
    form = tap_closed_form(knot, c)
    f = tap_polynomial(knot, c)
    assert sum(x.multiplicity for x in form.denominator_factors) == 2 * n
    assert f * form.denominator_polynomial() == form.numerator_polynomial().scale(expansion_sign(knot, c))
    assert f == tap_polynomial_reference(knot, c)
    assert all(v.is_algebraic_integer() for _, v in f.items())


@given(torus_knot_params(3, 7), st.sampled_from([3, 4]), st.data())
def test_max_dim_agrees(pq, n, data):
    p, q = pq
    knot = TorusKnot(p, q)
    comps = max_dim(knot, n)
    if not comps:
        return
    c = data.draw(st.sampled_from(comps))
    assert tap_max_dim(knot, n, c.k, c.a_set, c.b_set) == tap_polynomial(knot, c)


@given(torus_knot_params(2, 5), st.integers(2, 3), st.data())
def test_closed_form_embedding_matches_polynomial(pq, n, data):
    p, q = pq
    knot = TorusKnot(p, q)
    c = data.draw(st.sampled_from(enumerate_components(knot, n)))
    t0 = complex(data.draw(st.floats(1.2, 1.8)), data.draw(st.floats(-0.5, 0.5)))
    form = tap_closed_form(knot, c)
    got = tap_polynomial(knot, c).embed(t0)
    want = form.embed(t0) * expansion_sign(knot, c)
    assert abs(got - want) <= 1e-25 * abs(want)
