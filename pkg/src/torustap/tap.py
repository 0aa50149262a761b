"""Twisted Alexander polynomials of torus knots.

``tap_closed_form`` gives the rational function

    (t^{pq} omega - 1)^n / prod_i (t^q alpha_i - 1)^{v_i} prod_j (t^p beta_j - 1)^{w_j}

and ``tap_polynomial`` its exact polynomial expansion.  With v = max v_i,
w = max w_j the quotient is, up to sign,

    (t^{pq} omega - 1)^{n-v-w}
      * prod_i (t^q alpha_i - 1)^{v-v_i} * [prod_{a not in A} (t^q alpha(a) - 1)]^v
      * prod_j (t^p beta_j - 1)^{w-w_j}  * [prod_{b not in B} (t^p beta(b) - 1)]^w

and that product is what gets expanded, with no unit normalization.  Since
prod_{a in Z/p}(t^q alpha(a) - 1) = (-1)^{p+1} (t^{pq} omega - 1), the expansion
equals the quotient times ``expansion_sign`` = (-1)^{(p+1)v + (q+1)w}.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .charvar import ComponentData, TorusKnot
from .cyclo import CyclotomicNumber, RootExponent, _field, root_of_unity
from .kernels.binomial import expand_binomials, reduce_rows
from .laurent import LaurentPolynomial

__all__ = [
    "Factor",
    "RationalFunctionForm",
    "expansion_factors",
    "expansion_sign",
    "tap_closed_form",
    "tap_max_dim",
    "tap_polynomial",
    "tap_polynomial_reference",
]


@dataclass(frozen=True, order=True)
class Factor:
    """(scalar * t^t_power - 1)^multiplicity"""

    t_power: int
    scalar: RootExponent
    multiplicity: int

    def __post_init__(self):
        if self.t_power < 1 or self.multiplicity < 1:
            raise ValueError("t_power and multiplicity must be positive")

    def polynomial(self) -> LaurentPolynomial:
        base = LaurentPolynomial.binomial(root_of_unity(self.scalar), self.t_power)
        return base**self.multiplicity

    def embed(self, t0, precision=128):
        import mpmath

        with mpmath.workprec(precision + 16):
            z = mpmath.expjpi(2 * mpmath.mpf(self.scalar.exponent) / self.scalar.order)
            return (z * mpmath.mpc(t0) ** self.t_power - 1) ** self.multiplicity

    def format(self):
        e = self.scalar
        coeff = "" if e.is_one() else f"z{e.order}^{e.exponent}*"
        body = f"({coeff}t^{self.t_power} - 1)"
        return body if self.multiplicity == 1 else f"{body}^{self.multiplicity}"

    def to_json(self):
        return {
            "root": {"order": self.scalar.order, "exp": self.scalar.exponent},
            "t_power": self.t_power,
            "mult": self.multiplicity,
        }


@dataclass(frozen=True)
class RationalFunctionForm:
    numerator_factors: tuple
    denominator_factors: tuple

    def numerator_polynomial(self) -> LaurentPolynomial:
        out = LaurentPolynomial.one()
        for f in self.numerator_factors:
            out = out * f.polynomial()
        return out

    def denominator_polynomial(self) -> LaurentPolynomial:
        out = LaurentPolynomial.one()
        for f in self.denominator_factors:
            out = out * f.polynomial()
        return out

    def embed(self, t0, precision=128):
        """Complex value at t0; raises ZeroDivisionError at a pole."""
        import mpmath

        with mpmath.workprec(precision + 16):
            num = mpmath.mpc(1)
            for f in self.numerator_factors:
                num *= f.embed(t0, precision)
            den = mpmath.mpc(1)
            for f in self.denominator_factors:
                den *= f.embed(t0, precision)
            if den == 0:
                raise ZeroDivisionError("t0 is a pole of the closed form")
            return +(num / den)

    def format(self):
        num = " * ".join(f.format() for f in self.numerator_factors) or "1"
        den = " * ".join(f.format() for f in self.denominator_factors) or "1"
        return f"{num} / ({den})"

    def to_json(self):
        return {
            "numerator": [f.to_json() for f in self.numerator_factors],
            "denominator": [f.to_json() for f in self.denominator_factors],
        }


def _check(knot, c):
    if (knot.p, knot.q) != (c.p, c.q):
        raise ValueError(f"component belongs to K({c.p},{c.q}), not {knot}")
    c.validate()


def tap_closed_form(knot: TorusKnot, c: ComponentData) -> RationalFunctionForm:
    _check(knot, c)
    p, q = knot.p, knot.q
    num = (Factor(p * q, c.omega(), c.n),)
    den = [Factor(q, c.alpha(a), m) for a, m in c.a_list]
    den += [Factor(p, c.beta(b), m) for b, m in c.b_list]
    return RationalFunctionForm(num, tuple(sorted(den)))


def expansion_factors(knot: TorusKnot, c: ComponentData) -> list[tuple[int, int, int]]:
    """Rows ``(e, d, mult)`` meaning (zeta_{npq}^e t^d - 1)^mult."""
    _check(knot, c)
    p, q, n, k = c.p, c.q, c.n, c.k
    v, w = max(c.v), max(c.w)
    rows = [(p * q * k, p * q, n - v - w)]
    rows += [(q * (k + n * a), q, v - m) for a, m in c.a_list]
    rows += [(q * (k + n * a), q, v) for a in range(p) if a not in c.a_set]
    rows += [(p * (k + n * b), p, w - m) for b, m in c.b_list]
    rows += [(p * (k + n * b), p, w) for b in range(q) if b not in c.b_set]
    return [r for r in rows if r[2] > 0]


def expansion_sign(knot: TorusKnot, c: ComponentData) -> int:
    """tap_polynomial * denominator == expansion_sign * numerator."""
    _check(knot, c)
    v, w = max(c.v), max(c.w)
    return -1 if ((knot.p + 1) * v + (knot.q + 1) * w) % 2 else 1


def tap_polynomial(knot: TorusKnot, c: ComponentData) -> LaurentPolynomial:
    """Exact expansion, computed in the group ring of Z/npq and reduced once."""
    rows = expansion_factors(knot, c)
    n = c.conductor
    field = _field(n)
    if not rows:
        return LaurentPolynomial.one()
    grid = expand_binomials(np.array(rows, dtype=np.int64), n)
    reduced = reduce_rows(grid, field.reduction_matrix())
    terms = {}
    for i in range(reduced.shape[0]):
        row = reduced[i]
        if any(row):
            terms[i] = CyclotomicNumber._make(n, [int(x) for x in row], 1)
    return LaurentPolynomial._from_clean(terms)


def tap_polynomial_reference(knot: TorusKnot, c: ComponentData) -> LaurentPolynomial:
    """Same expansion built from LaurentPolynomial products (slow, independent)."""
    out = LaurentPolynomial.one()
    n = c.conductor
    for e, d, m in expansion_factors(knot, c):
        out = out * LaurentPolynomial.binomial(root_of_unity(n, e), d) ** m
    return out


def tap_max_dim(knot: TorusKnot, n: int, k: int, a_set, b_set) -> LaurentPolynomial:
    """Polynomial on a component where X and Y have distinct eigenvalues.

    (t^{pq} omega - 1)^{n-2} * prod_{a not in A}(zeta_{np}^{k+na} t^q - 1)
                             * prod_{b not in B}(zeta_{nq}^{k+nb} t^p - 1)
    """
    p, q = knot.p, knot.q
    a_set, b_set = set(a_set), set(b_set)
    if n < 2 or not 0 <= k < n:
        raise ValueError("need n >= 2 and 0 <= k < n")
    if len(a_set) != n or len(b_set) != n:
        raise ValueError(f"need exactly n={n} distinct exponents on each side")
    if not all(0 <= a < p for a in a_set) or not all(0 <= b < q for b in b_set):
        raise ValueError("exponents out of range")
    if (sum(a_set) + k) % p or (sum(b_set) + k) % q:
        raise ValueError("determinant condition fails")
    out = LaurentPolynomial.binomial(root_of_unity(n, k), p * q) ** (n - 2)
    for a in range(p):
        if a not in a_set:
            out = out * LaurentPolynomial.binomial(root_of_unity(n * p, k + n * a), q)
    for b in range(q):
        if b not in b_set:
            out = out * LaurentPolynomial.binomial(root_of_unity(n * q, k + n * b), p)
    return out
