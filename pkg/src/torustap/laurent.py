"""Sparse Laurent polynomials in t with cyclotomic coefficients."""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd

from .cyclo import CyclotomicNumber, euler_phi

__all__ = ["LaurentPolynomial", "equal_up_to_unit", "evaluate", "poly_add", "poly_mul"]


def _lcm(a, b):
    return a // gcd(a, b) * b


def _coerce_coeff(c):
    if isinstance(c, CyclotomicNumber):
        return c
    return CyclotomicNumber.rational(c)


class LaurentPolynomial:
    """Finitely supported map exponent -> nonzero CyclotomicNumber.

    Zero coefficients are never stored.  Instances are immutable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        for e, c in (terms or {}).items():
            c = _coerce_coeff(c)
            if c:
                clean[int(e)] = c
        self._terms = dict(sorted(clean.items()))

    @classmethod
    def _from_clean(cls, terms):
        obj = object.__new__(cls)
        obj._terms = dict(sorted(terms.items()))
        return obj

    @classmethod
    def monomial(cls, coeff, exponent=0):
        return cls({exponent: coeff})

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def binomial(cls, scalar, t_power):
        """scalar * t^t_power - 1"""
        return cls({t_power: scalar}) - cls.one()

    # ---- accessors -----------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, e):
        return self._terms.get(e, CyclotomicNumber.rational(0))

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def min_exponent(self):
        return next(iter(self._terms)) if self._terms else None

    def max_exponent(self):
        return next(reversed(self._terms)) if self._terms else None

    def span(self):
        if not self._terms:
            raise ValueError("the zero polynomial has no degree span")
        return self.max_exponent() - self.min_exponent()

    def conductor(self):
        """Least common conductor of the coefficients."""
        return reduce(_lcm, (c.conductor for c in self._terms.values()), 1)

    # ---- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentPolynomial):
            return other
        try:
            return LaurentPolynomial({0: _coerce_coeff(other)})
        except TypeError:
            return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out[e] + c if e in out else c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPolynomial._from_clean(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial._from_clean({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                p = c1 * c2
                out[e] = out[e] + p if e in out else p
        return LaurentPolynomial._from_clean({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials are invertible")
            (e, c), = self._terms.items()
            return LaurentPolynomial({e * k: c**k})
        result = LaurentPolynomial.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, i):
        """Multiply by t^i."""
        return LaurentPolynomial._from_clean({e + i: c for e, c in self._terms.items()})

    def scale(self, c):
        c = _coerce_coeff(c)
        if not c:
            return LaurentPolynomial()
        return LaurentPolynomial._from_clean({e: v * c for e, v in self._terms.items()})

    def evaluate(self, x):
        """Exact value at t = x; x must be nonzero if negative powers occur."""
        x = _coerce_coeff(x)
        if not self._terms:
            return CyclotomicNumber.rational(0, x.conductor)
        if not x and self.min_exponent() < 0:
            raise ZeroDivisionError("cannot evaluate a negative power of t at 0")
        total = CyclotomicNumber.rational(0, x.conductor)
        if x.is_rational() and x.as_rational() == 1:
            for c in self._terms.values():
                total = total + c
            return total
        for e, c in self._terms.items():
            total = total + c * x**e
        return total

    def embed(self, t0, precision=128):
        """Complex value at a complex t0 under the principal embedding."""
        import mpmath

        with mpmath.workprec(precision + 16):
            t0 = mpmath.mpc(t0)
            total = mpmath.mpc(0)
            for e, c in self._terms.items():
                total += c.embed(precision) * t0**e
        return +total

    # ---- comparison ----------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self._terms.keys() != other._terms.keys():
            return False
        return all(c == other._terms[e] for e, c in self._terms.items())

    def __hash__(self):
        return hash(tuple((e, hash(c)) for e, c in self._terms.items()))

    def equal_up_to_unit(self, other) -> bool:
        return equal_up_to_unit(self, other)

    # ---- text ----------------------------------------------------------------

    def format(self, descending=False):
        """Readable form.  Non-rational coefficients print in the ``z`` notation
        of their conductor inside parentheses."""
        if not self._terms:
            return "0"
        items = list(self._terms.items())
        if descending:
            items.reverse()
        parts = []
        for e, c in items:
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            if c.is_rational():
                r = c.as_rational()
                neg = r < 0
                mag = abs(r)
                if mono and mag == 1:
                    body = mono
                else:
                    body = str(mag) + (f"*{mono}" if mono else "")
            else:
                neg = False
                body = f"({c.terms_text()})" + (f"*{mono}" if mono else "")
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"{'-' if neg else '+'} {body}")
        return " ".join(parts)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"LaurentPolynomial({self.format()!r}, conductor={self.conductor()})"

    # ---- JSON ----------------------------------------------------------------

    def to_json(self):
        n = self.conductor()
        return {
            "var": "t",
            "conductor": n,
            "terms": [
                {"exp": e, "coeff": [str(x) for x in c.lift(n).coeffs]}
                for e, c in self._terms.items()
            ],
        }

    @classmethod
    def from_json(cls, data):
        if data.get("var", "t") != "t":
            raise ValueError("only the variable t is supported")
        n = int(data["conductor"])
        phi = euler_phi(n)
        terms = {}
        for term in data["terms"]:
            coeff = [Fraction(str(x)) for x in term["coeff"]]
            if len(coeff) != phi:
                raise ValueError(f"coefficient vector must have length {phi}")
            terms[int(term["exp"])] = CyclotomicNumber(n, coeff)
        return cls(terms)


def poly_add(f, g):
    return f + g


def poly_mul(f, g):
    return f * g


def evaluate(f, x):
    return f.evaluate(x)


def equal_up_to_unit(f: LaurentPolynomial, g: LaurentPolynomial) -> bool:
    """True iff f = +-t^i g for some integer i."""
    if f.is_zero() or g.is_zero():
        return f.is_zero() and g.is_zero()
    if len(f._terms) != len(g._terms) or f.span() != g.span():
        return False
    aligned = g.shift(f.min_exponent() - g.min_exponent())
    return f == aligned or f == -aligned
