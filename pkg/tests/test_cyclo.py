from fractions import Fraction
from math import cos, pi

import mpmath
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from torustap.cyclo import (
    CyclotomicNumber,
    NotRationalError,
    RootExponent,
    conjugate_embeddings,
    cyclotomic_polynomial,
    euler_phi,
    parse_cyclotomic,
    root_of_unity,
)

from strategies import CONDUCTORS, cyclotomic, same_field

z = root_of_unity


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == [-1, 1]
    assert cyclotomic_polynomial(4) == [1, 0, 1]
    assert cyclotomic_polynomial(6) == [1, -1, 1]


def test_euler_phi_matches_count():
    from math import gcd

    for n in range(1, 60):
        assert euler_phi(n) == sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def test_root_of_unity_reduction():
    assert z(2, 1) == -1
    assert z(6, 3) == -1
    i = z(4, 1)
    assert i.coeffs == (0, 1)
    assert i * i == -1


def test_basic_sums_and_products():
    assert z(3, 1) + z(3, 2) == -1
    five = z(5, 1)
    got = (1 + five) * (1 + z(5, 4))
    assert got == 2 + five + z(5, 4)


def test_inverses():
    assert CyclotomicNumber.rational(2).inverse() == Fraction(1, 2)
    assert z(7, 3).inverse() == z(7, 4)
    i = z(4, 1)
    assert (1 - i).inverse() == (1 + i) / 2
    with pytest.raises(ZeroDivisionError):
        CyclotomicNumber.rational(0, 5).inverse()


def test_embedding_values():
    v = z(4, 1).embed(128)
    assert abs(v - 1j) < 1e-30
    assert CyclotomicNumber.rational(-1).embed() == -1
    got = (2 + z(5, 1) + z(5, 4)).embed()
    assert abs(got - (2 + 2 * cos(2 * pi / 5))) < 1e-14


def test_algebraic_integer_flags():
    i = z(4, 1)
    assert z(3, 1).is_algebraic_integer()
    assert not CyclotomicNumber.rational(Fraction(1, 2)).is_algebraic_integer()
    assert ((1 - i).inverse() * (1 - i * i)).is_algebraic_integer()


def test_as_rational():
    assert (2 + z(5, 1) + z(5, 2) + z(5, 3) + z(5, 4)).as_rational() == 1
    with pytest.raises(NotRationalError):
        z(3, 1).as_rational()
    x = (2 - z(8, 1) - z(8, 7)) * (2 - z(8, 3) - z(8, 5))
    assert x.as_rational() == 2


def test_mixed_conductor_lifts():
    # zeta_4 * zeta_6 = zeta_12^5
    assert z(4, 1) * z(6, 1) == z(12, 5)
    assert (z(4, 1) * z(6, 1)).conductor == 12
    assert z(3, 1) == z(6, 2)


def test_text_form_and_parse():
    x = CyclotomicNumber(12, [Fraction(1, 2), 0, -1, 0])
    assert str(x) == "N=12: 1/2 - 1*z^2"
    assert parse_cyclotomic(str(x)) == x
    with pytest.raises(ValueError):
        parse_cyclotomic("1 + z")


def test_root_exponent_arithmetic():
    r = RootExponent(6, 7)
    assert r.exponent == 1
    assert (r * RootExponent(4, 1)) == RootExponent(12, 5)
    assert (r**6).is_one()


@given(same_field(3))
def test_field_axioms(xs):
    a, b, c = xs
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@given(cyclotomic())
def test_inverse_property(a):
    assume(not a.is_zero())
    assert a * a.inverse() == 1


@given(same_field(2))
def test_embedding_is_a_homomorphism(xs):
    a, b = xs
    with mpmath.workprec(200):
        assert abs((a * b).embed(150) - a.embed(150) * b.embed(150)) < mpmath.mpf(10) ** -35
        assert abs((a + b).embed(150) - a.embed(150) - b.embed(150)) < mpmath.mpf(10) ** -35


@given(cyclotomic(), st.sampled_from([1, 2, 3, 5]))
def test_lift_preserves_value(a, f):
    b = a.lift(a.conductor * f)
    assert b == a
    assert hash(b) == hash(a)
    assert abs(b.embed() - a.embed()) < 1e-25


@given(cyclotomic())
def test_text_round_trip(a):
    assert parse_cyclotomic(str(a)) == a


@given(cyclotomic())
def test_conjugate_embeds_as_complex_conjugate(a):
    assert abs(a.conjugate().embed() - mpmath.conj(a.embed())) < 1e-25


@given(cyclotomic())
def test_norm_is_rational(a):
    # product over all Galois conjugates is rational
    with mpmath.workprec(160):
        prod = mpmath.fprod(conjugate_embeddings(a, 160))
        assert abs(prod.imag) < 1e-30


@given(st.sampled_from(CONDUCTORS), st.integers(-40, 40))
def test_roots_are_units(n, e):
    r = z(n, e)
    assert r.is_algebraic_integer()
    assert r ** n == 1
    assert r.inverse() == z(n, -e)
