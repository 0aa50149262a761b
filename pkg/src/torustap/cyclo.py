"""Exact arithmetic in cyclotomic fields Q(zeta_N).

An element is stored in the power basis 1, z, ..., z^(phi(N)-1) of
Q[x]/(Phi_N(x)) where z = exp(2*pi*i/N).  Coefficients are kept as integer
numerators over one positive common denominator, so there is no floating
point anywhere in the exact path.

Values keep the conductor they were built at.  Mixed-conductor operations
lift both operands to the least common multiple first; equality is decided
the same way.

The ring of integers of Q(zeta_N) is Z[zeta_N] and the power basis is an
integral basis, so an element is an algebraic integer exactly when every
power-basis coefficient is an integer.  ``is_algebraic_integer`` relies on
this.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational

import mpmath
import numpy as np

__all__ = [
    "CyclotomicNumber",
    "NotRationalError",
    "RootExponent",
    "as_rational",
    "conjugate_embeddings",
    "cyclotomic_polynomial",
    "euler_phi",
    "is_algebraic_integer",
    "parse_cyclotomic",
    "root_of_unity",
]


class NotRationalError(ValueError):
    """Raised when a cyclotomic number is asked for a rational value it lacks."""


def _divisors(n):
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _mobius(n):
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    result, m, d = n, n, 2
    while d * d <= m:
        if m % d == 0:
            while m % d == 0:
                m //= d
            result -= result // d
        d += 1
    if m > 1:
        result -= result // m
    return result


def _poly_divexact(num, den):
    """Exact division of integer polynomials (ascending coefficients), den monic."""
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + dn]
        out[i] = c
        if c:
            for j in range(dn + 1):
                num[i + j] -= c * den[j]
    if any(num[:dn]):
        raise ArithmeticError("division is not exact")
    return out


@lru_cache(maxsize=None)
def _cyclotomic_tuple(n):
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly = _poly_divexact(poly, _cyclotomic_tuple(d))
    return tuple(poly)


def cyclotomic_polynomial(n: int) -> list[int]:
    """Coefficients of Phi_n, lowest degree first.

    Computed by dividing x^n - 1 by Phi_d for every proper divisor d of n.

    >>> cyclotomic_polynomial(6)
    [1, -1, 1]
    """
    if n < 1:
        raise ValueError("conductor must be positive")
    return list(_cyclotomic_tuple(n))


class _Field:
    """Per-conductor reduction data.  Built once and never mutated."""

    __slots__ = ("n", "degree", "tail", "traces", "_reduction")

    def __init__(self, n):
        phi = _cyclotomic_tuple(n)
        self.n = n
        self.degree = len(phi) - 1
        # x^degree == -sum(phi_j x^j), sparse
        self.tail = tuple((j, c) for j, c in enumerate(phi[:-1]) if c)
        # Tr(z^i) is the Ramanujan sum c_n(i)
        self.traces = tuple(
            sum(_mobius(n // d) * d for d in _divisors(gcd(n, i) if i else n))
            for i in range(self.degree)
        )
        self._reduction = None

    def reduce(self, coeffs):
        """Reduce an integer list of any length modulo Phi_n, in place."""
        deg = self.degree
        tail = self.tail
        for i in range(len(coeffs) - 1, deg - 1, -1):
            c = coeffs[i]
            if c:
                coeffs[i] = 0
                base = i - deg
                for j, pj in tail:
                    coeffs[base + j] -= c * pj
        del coeffs[deg:]
        if len(coeffs) < deg:
            coeffs.extend([0] * (deg - len(coeffs)))
        return coeffs

    def reduction_matrix(self):
        """Integer matrix R with row i holding z^i in the power basis, i < n."""
        if self._reduction is None:
            rows = []
            for i in range(self.n):
                v = [0] * (i + 1)
                v[i] = 1
                rows.append(self.reduce(v))
            mat = np.array(rows, dtype=object)
            if all(abs(int(x)) < 2**31 for x in mat.flat):
                mat = mat.astype(np.int64)
            mat.setflags(write=False)
            self._reduction = mat
        return self._reduction


@lru_cache(maxsize=None)
def _field(n):
    return _Field(n)


def _lcm(a, b):
    return a // gcd(a, b) * b


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


class CyclotomicNumber:
    """Immutable element of Q(zeta_N) in the power basis modulo Phi_N."""

    __slots__ = ("_n", "_num", "_den")

    def __init__(self, conductor, coeffs=None):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        field = _field(conductor)
        if coeffs is None:
            coeffs = [0] * field.degree
        coeffs = [_as_fraction(c) for c in coeffs]
        if len(coeffs) != field.degree:
            raise ValueError(
                f"expected {field.degree} coefficients for conductor {conductor}, "
                f"got {len(coeffs)}"
            )
        den = 1
        for c in coeffs:
            den = _lcm(den, c.denominator)
        nums = [c.numerator * (den // c.denominator) for c in coeffs]
        self._set(conductor, nums, den)

    def _set(self, n, nums, den):
        g = den
        for a in nums:
            if a:
                g = gcd(g, a)
                if g == 1:
                    break
        if g != 1:
            nums = [a // g for a in nums]
            den //= g
        self._n = n
        self._num = tuple(nums)
        self._den = den

    @classmethod
    def _make(cls, n, nums, den=1):
        obj = object.__new__(cls)
        if den < 0:
            nums, den = [-a for a in nums], -den
        obj._set(n, nums, den)
        return obj

    @classmethod
    def from_poly(cls, conductor, coeffs):
        """Reduce an arbitrary-length rational polynomial in z modulo Phi_N."""
        fr = [_as_fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = _lcm(den, c.denominator)
        nums = [c.numerator * (den // c.denominator) for c in fr]
        return cls._make(conductor, _field(conductor).reduce(nums), den)

    @classmethod
    def rational(cls, value, conductor=1):
        field = _field(conductor)
        v = _as_fraction(value)
        nums = [0] * field.degree
        nums[0] = v.numerator
        return cls._make(conductor, nums, v.denominator)

    # ---- accessors ---------------------------------------------------------

    @property
    def conductor(self) -> int:
        return self._n

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(a, self._den) for a in self._num)

    @property
    def numerators(self) -> tuple[int, ...]:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    def is_zero(self) -> bool:
        return not any(self._num)

    def __bool__(self):
        return not self.is_zero()

    # ---- conductor handling ------------------------------------------------

    def lift(self, conductor: int) -> "CyclotomicNumber":
        """Express the same value at a multiple of the current conductor."""
        if conductor == self._n:
            return self
        if conductor % self._n:
            raise ValueError(f"{conductor} is not a multiple of {self._n}")
        step = conductor // self._n
        field = _field(conductor)
        out = [0] * max(field.degree, (len(self._num) - 1) * step + 1)
        for i, a in enumerate(self._num):
            if a:
                out[i * step] = a
        return CyclotomicNumber._make(conductor, field.reduce(out), self._den)

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            if other._n == self._n:
                return self, other
            n = _lcm(self._n, other._n)
            return self.lift(n), other.lift(n)
        try:
            return self, CyclotomicNumber.rational(other, self._n)
        except TypeError:
            return None

    # ---- ring operations ---------------------------------------------------

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        if x._den == y._den:
            nums = [a + b for a, b in zip(x._num, y._num)]
            return CyclotomicNumber._make(x._n, nums, x._den)
        den = _lcm(x._den, y._den)
        fx, fy = den // x._den, den // y._den
        nums = [a * fx + b * fy for a, b in zip(x._num, y._num)]
        return CyclotomicNumber._make(x._n, nums, den)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber._make(self._n, [-a for a in self._num], self._den)

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        return x + (-y)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        field = _field(x._n)
        xs = [(i, a) for i, a in enumerate(x._num) if a]
        ys = [(j, b) for j, b in enumerate(y._num) if b]
        out = [0] * (2 * field.degree)
        for i, a in xs:
            for j, b in ys:
                out[i + j] += a * b
        return CyclotomicNumber._make(x._n, field.reduce(out), x._den * y._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, CyclotomicNumber):
            return self * other.inverse()
        try:
            v = _as_fraction(other)
        except TypeError:
            return NotImplemented
        if v == 0:
            raise ZeroDivisionError("division by zero in Q(zeta)")
        return self * CyclotomicNumber.rational(1 / v, self._n)

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = CyclotomicNumber.rational(1, self._n)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self) -> "CyclotomicNumber":
        """Multiplicative inverse by extended Euclid against Phi_N over Q."""
        nz = [(i, a) for i, a in enumerate(self._num) if a]
        if not nz:
            raise ZeroDivisionError("zero has no inverse in Q(zeta)")
        n = self._n
        if len(nz) == 1:
            i, a = nz[0]
            e = (-i) % n
            inv = [0] * (e + 1)
            inv[e] = self._den
            return CyclotomicNumber._make(n, _field(n).reduce(inv), a)
        s = _poly_inverse_mod([Fraction(a) for a in self._num], _cyclotomic_tuple(n))
        return CyclotomicNumber.from_poly(n, [c * self._den for c in s])

    # ---- comparisons -------------------------------------------------------

    def __eq__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        return x._den == y._den and x._num == y._num

    def __hash__(self):
        # normalized trace Tr(x)/phi(N) does not depend on the conductor
        field = _field(self._n)
        tr = sum(a * t for a, t in zip(self._num, field.traces))
        return hash(Fraction(tr, self._den * field.degree))

    # ---- queries -----------------------------------------------------------

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def is_algebraic_integer(self) -> bool:
        return self._den == 1

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise NotRationalError(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    def conjugate(self) -> "CyclotomicNumber":
        """Image under complex conjugation z -> z^(-1)."""
        n = self._n
        field = _field(n)
        out = [0] * max(n, 1)
        for i, a in enumerate(self._num):
            if a:
                out[(-i) % n] += a
        return CyclotomicNumber._make(n, field.reduce(out), self._den)

    def embed(self, precision: int = 128, power: int = 1) -> mpmath.mpc:
        """Complex value under z -> exp(2*pi*i*power/N)."""
        with mpmath.workprec(precision + 16):
            n = self._n
            total = mpmath.mpc(0)
            for i, a in enumerate(self._num):
                if a:
                    total += a * mpmath.expjpi(mpmath.mpf(2 * i * power) / n)
            value = total / self._den
        return +value

    def __complex__(self):
        return complex(self.embed(64))

    # ---- text form ---------------------------------------------------------

    def terms_text(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = str(abs(c))
            body = mag if i == 0 else f"{mag}*z^{i}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(parts) if parts else "0"

    def __str__(self):
        return f"N={self._n}: {self.terms_text()}"

    def __repr__(self):
        return f"CyclotomicNumber({self._n}, [{', '.join(map(str, self.coeffs))}])"


def _poly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_divmod(a, b):
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    q = [Fraction(0)] * max(len(a) - db, 1)
    for i in range(len(a) - 1 - db, -1, -1):
        c = a[i + db] / lead
        q[i] = c
        if c:
            for j in range(db + 1):
                a[i + j] -= c * b[j]
    return _poly_trim(q), _poly_trim(a[:db])


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] -= x
    return _poly_trim(out)


def _poly_inverse_mod(a, modulus):
    """s with s*a = 1 mod modulus, via extended Euclid over Q."""
    r0, r1 = [Fraction(c) for c in modulus], _poly_trim(list(a))
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        if not r1:
            raise ZeroDivisionError("element is not invertible (shares a factor with Phi_N)")
    c = r1[0]
    return [x / c for x in s1]


@dataclass(frozen=True, order=True)
class RootExponent:
    """The root of unity zeta_order^exponent, exponent reduced to [0, order)."""

    order: int
    exponent: int

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be positive")
        object.__setattr__(self, "exponent", self.exponent % self.order)

    def at_order(self, order: int) -> "RootExponent":
        if order % self.order:
            raise ValueError(f"{order} is not a multiple of {self.order}")
        return RootExponent(order, self.exponent * (order // self.order))

    def to_cyclotomic(self, conductor: int | None = None) -> CyclotomicNumber:
        r = self if conductor is None else self.at_order(conductor)
        return root_of_unity(r)

    def __mul__(self, other):
        if not isinstance(other, RootExponent):
            return NotImplemented
        n = _lcm(self.order, other.order)
        return RootExponent(n, self.at_order(n).exponent + other.at_order(n).exponent)

    def __pow__(self, e):
        return RootExponent(self.order, self.exponent * e)

    def is_one(self) -> bool:
        return self.exponent == 0

    def angle(self) -> Fraction:
        """Argument as a fraction of a full turn."""
        return Fraction(self.exponent, self.order)


def root_of_unity(e: RootExponent | int, exponent: int | None = None) -> CyclotomicNumber:
    """Exact zeta_N^e.  Accepts a RootExponent or the pair (N, e)."""
    if not isinstance(e, RootExponent):
        e = RootExponent(e, exponent)
    n = e.order
    field = _field(n)
    out = [0] * max(field.degree, e.exponent + 1)
    out[e.exponent] = 1
    return CyclotomicNumber._make(n, field.reduce(out), 1)


def is_algebraic_integer(x: CyclotomicNumber) -> bool:
    return x.is_algebraic_integer()


def as_rational(x: CyclotomicNumber) -> Fraction:
    return x.as_rational()


def conjugate_embeddings(x: CyclotomicNumber, precision: int = 128) -> list:
    """All complex embeddings, principal (z -> exp(2*pi*i/N)) first."""
    if precision < 53:
        raise ValueError("precision must be at least 53 bits")
    n = x.conductor
    return [x.embed(precision, j) for j in range(1, max(n, 2)) if gcd(j, n) == 1] or [
        x.embed(precision)
    ]


_TERM = re.compile(r"^([+-]?)\s*([0-9]+(?:/[0-9]+)?)(?:\*z\^([0-9]+))?$")


def parse_cyclotomic(text: str) -> CyclotomicNumber:
    """Inverse of ``str``: parses ``N=12: 1/2 - 1*z^2``."""
    head, _, body = text.partition(":")
    head = head.strip()
    if not head.startswith("N="):
        raise ValueError(f"missing conductor in {text!r}")
    n = int(head[2:])
    body = body.strip()
    coeffs = [Fraction(0)] * euler_phi(n)
    if body == "0":
        return CyclotomicNumber(n, coeffs)
    tokens = re.split(r"\s+(?=[+-]\s)", body)
    for tok in tokens:
        m = _TERM.match(tok.replace(" ", ""))
        if not m:
            raise ValueError(f"cannot parse term {tok!r}")
        sign, mag, power = m.groups()
        c = Fraction(mag) * (-1 if sign == "-" else 1)
        i = int(power) if power else 0
        if i >= len(coeffs):
            raise ValueError(f"power {i} outside the power basis of conductor {n}")
        coeffs[i] += c
    return CyclotomicNumber(n, coeffs)
