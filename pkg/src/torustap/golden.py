"""Reference polynomials for small torus knots, transcribed by hand.

A factor is ``(turn, t_power, mult, const)`` meaning
(exp(2 pi i * turn) * t^t_power + const)^mult with ``turn`` a Fraction of a full
turn and ``const`` in {+1, -1}.  A row is ``(sign, factors)``.
"""

from __future__ import annotations

from fractions import Fraction as F
from math import lcm

from .charvar import ComponentData, TorusKnot, enumerate_components
from .cyclo import root_of_unity
from .laurent import LaurentPolynomial

__all__ = [
    "GOLDEN_CASES",
    "GoldenCase",
    "build_polynomial",
    "p3_case1_prefix",
]


def build_polynomial(sign, factors) -> LaurentPolynomial:
    out = LaurentPolynomial.monomial(sign)
    for turn, d, mult, const in factors:
        turn = F(turn)
        z = root_of_unity(turn.denominator, turn.numerator)
        out = out * (LaurentPolynomial.monomial(z, d) + const) ** mult
    return out


class GoldenCase:
    """A named expected polynomial attached to a selector over components."""

    def __init__(self, name, p, q, n, select, sign, factors):
        self.name = name
        self.knot = TorusKnot(p, q)
        self.n = n
        self.select = select
        self.sign = sign
        self.factors = factors

    def component(self) -> ComponentData:
        hits = [c for c in enumerate_components(self.knot, self.n) if self.select(c)]
        if len(hits) != 1:
            raise LookupError(f"{self.name}: selector matched {len(hits)} components")
        return hits[0]

    def expected(self) -> LaurentPolynomial:
        return build_polynomial(self.sign, self.factors)

    def conductor(self):
        return lcm(*(F(f[0]).denominator for f in self.factors))


def _by_bset(k, bset):
    bset = frozenset(bset)
    return lambda c: c.k == k and c.b_set == bset and all(m == 1 for m in c.w)


def _by_doubled_a(k, a2, a3):
    return lambda c: c.k == k and c.a_list == tuple(sorted(((a2, 2), (a3, 1))))


def _by_doubled_b(b2, b3):
    return lambda c: c.k == 0 and c.b_list == tuple(sorted(((b2, 2), (b3, 1))))


def _max_dim(c):
    return all(m == 1 for m in c.v + c.w)


_T5 = (F(0), 5, 1, -1)

GOLDEN_CASES = [
    GoldenCase("K(2,3) n=3", 2, 3, 3, lambda c: True, 1, [(F(0), 3, 1, -1)]),
    GoldenCase("K(3,4) n=3 dim 4", 3, 4, 3, _max_dim, -1, [(F(0), 12, 1, -1), (F(0), 3, 1, 1)]),
    # K(2,5), n = 3
    GoldenCase("K(2,5) k=0 {0,1,4}", 2, 5, 3, _by_bset(0, {0, 1, 4}), 1,
               [_T5, (F(2, 5), 2, 1, -1), (F(3, 5), 2, 1, -1)]),
    GoldenCase("K(2,5) k=0 {0,2,3}", 2, 5, 3, _by_bset(0, {0, 2, 3}), 1,
               [_T5, (F(1, 5), 2, 1, -1), (F(4, 5), 2, 1, -1)]),
    GoldenCase("K(2,5) k=1 {0,1,3}", 2, 5, 3, _by_bset(1, {0, 1, 3}), -1,
               [(F(1, 6), 5, 1, 1), (F(7, 15), 2, 1, -1), (F(13, 15), 2, 1, -1)]),
    GoldenCase("K(2,5) k=1 {2,3,4}", 2, 5, 3, _by_bset(1, {2, 3, 4}), -1,
               [(F(1, 6), 5, 1, 1), (F(1, 15), 2, 1, -1), (F(4, 15), 2, 1, -1)]),
    GoldenCase("K(2,5) k=2 {0,1,2}", 2, 5, 3, _by_bset(2, {0, 1, 2}), 1,
               [(F(1, 3), 5, 1, -1), (F(11, 15), 2, 1, -1), (F(14, 15), 2, 1, -1)]),
    GoldenCase("K(2,5) k=2 {1,3,4}", 2, 5, 3, _by_bset(2, {1, 3, 4}), 1,
               [(F(1, 3), 5, 1, -1), (F(2, 15), 2, 1, -1), (F(8, 15), 2, 1, -1)]),
    # K(3,4), n = 3, X has a repeated eigenvalue
    GoldenCase("K(3,4) k=1 (1,0)", 3, 4, 3, _by_doubled_a(1, 1, 0), 1,
               [(F(1, 9), 4, 1, -1), (F(7, 9), 4, 2, -1), (F(5, 6), 3, 1, -1)]),
    GoldenCase("K(3,4) k=1 (2,1)", 3, 4, 3, _by_doubled_a(1, 2, 1), 1,
               [(F(4, 9), 4, 1, -1), (F(1, 9), 4, 2, -1), (F(5, 6), 3, 1, -1)]),
    GoldenCase("K(3,4) k=1 (0,2)", 3, 4, 3, _by_doubled_a(1, 0, 2), 1,
               [(F(7, 9), 4, 1, -1), (F(4, 9), 4, 2, -1), (F(5, 6), 3, 1, -1)]),
    GoldenCase("K(3,4) k=2 (2,0)", 3, 4, 3, _by_doubled_a(2, 2, 0), 1,
               [(F(2, 9), 4, 1, -1), (F(5, 9), 4, 2, -1), (F(1, 6), 3, 1, -1)]),
    GoldenCase("K(3,4) k=2 (0,1)", 3, 4, 3, _by_doubled_a(2, 0, 1), 1,
               [(F(5, 9), 4, 1, -1), (F(8, 9), 4, 2, -1), (F(1, 6), 3, 1, -1)]),
    GoldenCase("K(3,4) k=2 (1,2)", 3, 4, 3, _by_doubled_a(2, 1, 2), 1,
               [(F(8, 9), 4, 1, -1), (F(2, 9), 4, 2, -1), (F(1, 6), 3, 1, -1)]),
    # K(3,4), n = 3, Y has a repeated eigenvalue
    GoldenCase("K(3,4) b=(1,2)", 3, 4, 3, _by_doubled_b(1, 2), -1,
               [(F(0), 3, 1, 1), (F(0), 3, 2, -1), (F(1, 4), 3, 2, 1)]),
    GoldenCase("K(3,4) b=(2,0)", 3, 4, 3, _by_doubled_b(2, 0), 1,
               [(F(0), 3, 1, -1), (F(1, 4), 3, 2, -1), (F(1, 4), 3, 2, 1)]),
    GoldenCase("K(3,4) b=(3,2)", 3, 4, 3, _by_doubled_b(3, 2), -1,
               [(F(0), 3, 1, 1), (F(0), 3, 2, -1), (F(1, 4), 3, 2, -1)]),
]


# For p = 3 and any q: X eigenvalue exponents (a2 doubled, a3 single) give the
# t^q part of the polynomial; the rest is the Y-complement product.
P3_CASE1_PREFIX = {
    (1, 1, 0): [(F(1, 9), 1, -1), (F(7, 9), 2, -1)],
    (1, 2, 1): [(F(4, 9), 1, -1), (F(1, 9), 2, -1)],
    (1, 0, 2): [(F(7, 9), 1, -1), (F(4, 9), 2, -1)],
    (2, 2, 0): [(F(2, 9), 1, -1), (F(5, 9), 2, -1)],
    (2, 0, 1): [(F(5, 9), 1, -1), (F(8, 9), 2, -1)],
    (2, 1, 2): [(F(8, 9), 1, -1), (F(2, 9), 2, -1)],
}


def p3_case1_prefix(q, k, a2, a3) -> LaurentPolynomial:
    rows = P3_CASE1_PREFIX[(k, a2, a3)]
    return build_polynomial(1, [(turn, q, mult, const) for turn, mult, const in rows])
