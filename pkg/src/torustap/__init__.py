"""Twisted Alexander polynomials and Reidemeister torsions of torus knots."""

from .charvar import ComponentData, TorusKnot, count_components, enumerate_components
from .cyclo import CyclotomicNumber, RootExponent, is_algebraic_integer, root_of_unity
from .laurent import LaurentPolynomial
from .tap import tap_closed_form, tap_polynomial
from .torsion import TorsionValue, adjoint_torsion, sl2_torsion, torsion_from_component

__version__ = "0.1.0"

__all__ = [
    "ComponentData",
    "CyclotomicNumber",
    "LaurentPolynomial",
    "RootExponent",
    "TorsionValue",
    "TorusKnot",
    "adjoint_torsion",
    "count_components",
    "enumerate_components",
    "is_algebraic_integer",
    "root_of_unity",
    "sl2_torsion",
    "tap_closed_form",
    "tap_polynomial",
    "torsion_from_component",
]
