"""Reidemeister torsions of torus-knot exteriors.

Non-acyclic representations get torsion 0 by convention.  The adjoint torsion
is only defined up to sign; the positive real representative is returned and
``sign_defined`` is False.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .charvar import ComponentData, TorusKnot, _check_sl2_index
from .cyclo import CyclotomicNumber, is_algebraic_integer, root_of_unity
from .tap import expansion_sign, tap_polynomial

__all__ = [
    "TorsionValue",
    "adjoint_torsion",
    "certify_torsion_integrality",
    "sl2_torsion",
    "torsion_from_component",
    "torsion_ratio",
]


@dataclass(frozen=True)
class TorsionValue:
    value: CyclotomicNumber
    acyclic: bool
    sign_defined: bool = True

    def __post_init__(self):
        if self.acyclic == self.value.is_zero():
            raise ValueError("acyclic must hold exactly when the value is nonzero")

    def to_json(self, precision=53):
        z = complex(self.value.embed(max(precision, 53)))
        return {
            "value": str(self.value),
            "float": [z.real, z.imag],
            "acyclic": self.acyclic,
            "sign_defined": self.sign_defined,
            "algebraic_integer": self.value.is_algebraic_integer(),
        }


def _zero(conductor=1):
    return CyclotomicNumber.rational(0, conductor)


def torsion_from_component(knot: TorusKnot, c: ComponentData) -> TorsionValue:
    """Value at t = 1 of the twisted Alexander polynomial in quotient form.

    The expanded polynomial is evaluated at 1 and multiplied by
    ``expansion_sign`` so the result is (omega - 1)^n / prod(alpha_i - 1)(beta_j - 1).
    """
    value = tap_polynomial(knot, c).evaluate(1) * expansion_sign(knot, c)
    return TorsionValue(value, acyclic=not value.is_zero())


def torsion_ratio(knot: TorusKnot, c: ComponentData) -> CyclotomicNumber:
    """(omega - 1)^n / prod (alpha_i - 1)^{v_i} (beta_j - 1)^{w_j}, as a limit at t = 1.

    Independent of the expansion: the inverses are taken in Q(zeta_{np}) and
    Q(zeta_{nq}) and everything is multiplied out.  When omega = 1 and the
    eigenvalue 1 has multiplicities v0 + w0 = n the quotient is 0/0 at t = 1;
    its limit is p^{v0} q^{w0} / prod'(alpha_i - 1) prod'(beta_j - 1) over the
    eigenvalues other than 1.  Slow for large conductors.
    """
    if not c.is_acyclic():
        return _zero(c.conductor)
    n, p, q, k = c.n, c.p, c.q, c.k
    if k:
        out = (root_of_unity(n, k) - 1) ** n
    else:
        v0, w0 = c.unit_multiplicities()
        out = CyclotomicNumber.rational(p**v0 * q**w0)
    for a, m in c.a_list:
        if k or a:
            out = out * (root_of_unity(n * p, k + n * a) - 1).inverse() ** m
    for b, m in c.b_list:
        if k or b:
            out = out * (root_of_unity(n * q, k + n * b) - 1).inverse() ** m
    return out


@lru_cache(maxsize=None)
def _two_minus_two_cos(order, e):
    """2 - zeta_order^e - zeta_order^{-e}, i.e. 4 sin^2(pi e / order)."""
    return 2 - root_of_unity(order, e) - root_of_unity(order, -e)


@lru_cache(maxsize=None)
def _inv_two_minus_two_cos(order, e):
    return _two_minus_two_cos(order, e).inverse()


def sl2_torsion(knot: TorusKnot, a: int, b: int) -> TorsionValue:
    """1 / (4 sin^2(a pi / 2p) sin^2(b pi / 2q)) when a, b are odd, else 0."""
    _check_sl2_index(knot, a, b)
    p, q = knot.p, knot.q
    if a % 2 == 0:
        return TorsionValue(_zero(), acyclic=False)
    value = 4 * _inv_two_minus_two_cos(2 * p, a) * _inv_two_minus_two_cos(2 * q, b)
    return TorsionValue(value, acyclic=True)


def sl2_torsion_inverse(knot: TorusKnot, a: int, b: int) -> CyclotomicNumber:
    """1 / sl2_torsion for odd a, b, computed without any inversion."""
    _check_sl2_index(knot, a, b)
    if a % 2 == 0:
        raise ZeroDivisionError("the representation is not acyclic")
    return _two_minus_two_cos(2 * knot.p, a) * _two_minus_two_cos(2 * knot.q, b) / 4


def adjoint_torsion(knot: TorusKnot, a: int, b: int) -> TorsionValue:
    """pq / (16 sin^2(a pi / p) sin^2(b pi / q)), positive representative."""
    _check_sl2_index(knot, a, b)
    p, q = knot.p, knot.q
    value = p * q * _inv_two_minus_two_cos(p, a) * _inv_two_minus_two_cos(q, b)
    return TorsionValue(value, acyclic=True, sign_defined=False)


def adjoint_torsion_inverse(knot: TorusKnot, a: int, b: int) -> CyclotomicNumber:
    _check_sl2_index(knot, a, b)
    p, q = knot.p, knot.q
    return _two_minus_two_cos(p, a) * _two_minus_two_cos(q, b) / (p * q)


def certify_torsion_integrality(tv: TorsionValue) -> bool:
    return is_algebraic_integer(tv.value)
