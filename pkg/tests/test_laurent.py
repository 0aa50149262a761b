import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from torustap.cyclo import CyclotomicNumber, root_of_unity
from torustap.laurent import LaurentPolynomial, equal_up_to_unit

from strategies import cyclotomic

T = LaurentPolynomial.monomial(1, 1)
ONE = LaurentPolynomial.one()


def poly(d):
    return LaurentPolynomial(d)


def test_products_and_cancellation():
    assert (T - 1) * (T + 1) == poly({2: 1, 0: -1})
    assert poly({3: 1, 0: -1}) + poly({0: 1, 3: -1}) == LaurentPolynomial()
    z3 = root_of_unity(3, 1)
    got = LaurentPolynomial.binomial(z3, 1) * LaurentPolynomial.binomial(z3 * z3, 1) * (T - 1)
    assert got == poly({3: 1, 0: -1})


def test_no_zero_terms_stored():
    p = poly({0: 0, 1: 2, 2: CyclotomicNumber.rational(0, 5)})
    assert list(p.terms) == [1]
    assert (T - T).is_zero()


def test_evaluation():
    f = poly({3: 1, 0: -1})
    assert f.evaluate(1) == 0
    assert f.evaluate(-1) == -2
    g = LaurentPolynomial.binomial(root_of_unity(4, 1), 2)
    assert g.evaluate(root_of_unity(8, 1)) == -2


def test_negative_powers():
    f = poly({-2: 1, 1: 3})
    assert f.span() == 3
    assert f.evaluate(2) * 4 == 1 + 3 * 8
    with pytest.raises(ZeroDivisionError):
        f.evaluate(0)


def test_units():
    f = poly({3: 1, 0: -1})
    assert equal_up_to_unit(f, -f)
    assert equal_up_to_unit(f, f.shift(2))
    assert not equal_up_to_unit(f, poly({3: 1, 0: 1}))


def test_format():
    f = poly({3: 1, 0: -1})
    assert f.format(descending=True) == "t^3 - 1"
    assert f.format() == "-1 + t^3"
    assert LaurentPolynomial().format() == "0"


def test_json_shape():
    f = poly({3: root_of_unity(3, 1), 0: -1})
    data = f.to_json()
    assert data["var"] == "t" and data["conductor"] == 3
    assert [t["exp"] for t in data["terms"]] == [0, 3]
    assert LaurentPolynomial.from_json(json.loads(json.dumps(data))) == f


@st.composite
def laurent(draw):
    n = draw(st.sampled_from([1, 3, 4, 5, 12]))
    exps = draw(st.lists(st.integers(-4, 6), max_size=5, unique=True))
    return LaurentPolynomial({e: draw(cyclotomic(n)) for e in exps})


@given(laurent(), laurent(), laurent())
def test_ring_axioms(f, g, h):
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert f * (g + h) == f * g + f * h
    assert f * ONE == f


@given(laurent(), laurent(), st.sampled_from([2, 3, -1]))
def test_evaluation_is_a_homomorphism(f, g, x):
    assert (f * g).evaluate(x) == f.evaluate(x) * g.evaluate(x)


@given(laurent())
def test_json_round_trip(f):
    assert LaurentPolynomial.from_json(json.loads(json.dumps(f.to_json()))) == f


@given(laurent(), st.integers(-5, 5))
def test_shift_is_a_unit(f, i):
    if not f.is_zero():
        assert equal_up_to_unit(f, -(f.shift(i)))
        assert f.shift(i).span() == f.span()
