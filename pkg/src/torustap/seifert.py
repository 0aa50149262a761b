"""Torsion of Seifert fibered spaces over an orientable base of genus g >= 1.

Input is eigenvalue data only: rho(h) = omega * I with omega = zeta_n^k and,
for each exceptional fiber q_j, the n eigenvalues e_{j,k} of rho(q_j).  The
module does not check that an irreducible representation with this data
exists.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, lcm

from .cyclo import CyclotomicNumber, RootExponent, root_of_unity
from .torsion import TorsionValue

__all__ = [
    "CertificateMismatch",
    "SeifertCertificate",
    "SeifertIndex",
    "SeifertRepData",
    "mu_nu",
    "parse_seifert_index",
    "random_seifert_input",
    "seifert_integrality_certificate",
    "seifert_torsion",
    "valid_eigen_exponents",
]


class CertificateMismatch(ArithmeticError):
    pass


@dataclass(frozen=True)
class SeifertIndex:
    euler_v: int
    genus: int
    fibers: tuple

    def __post_init__(self):
        object.__setattr__(self, "fibers", tuple((int(a), int(b)) for a, b in self.fibers))
        if self.genus < 1:
            raise ValueError("genus must be at least 1 (g = 0 is outside the formula's scope)")
        for a, b in self.fibers:
            if a < 2 or gcd(a, b) != 1:
                raise ValueError(f"fiber ({a}, {b}) needs alpha >= 2 and gcd(alpha, beta) = 1")

    @property
    def m(self):
        return len(self.fibers)

    def __str__(self):
        body = ",".join(f"({a},{b})" for a, b in self.fibers)
        return f"{self.euler_v},{self.genus};{body}"


_FIBER = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")


def parse_seifert_index(text: str) -> SeifertIndex:
    """Parse ``"v,g;(a1,b1),(a2,b2)"``; ``"{v,(o,g);(a1,b1)}"`` is accepted too."""
    s = text.strip().strip("{}")
    head, _, tail = s.partition(";")
    head = head.replace("(o,", "").replace("(", "").replace(")", "")
    parts = [x for x in re.split(r"[,\s]+", head.strip()) if x]
    if len(parts) != 2:
        raise ValueError(f"cannot read 'v,g' from {text!r}")
    v, g = int(parts[0]), int(parts[1])
    fibers = [(int(a), int(b)) for a, b in _FIBER.findall(tail)]
    leftover = _FIBER.sub("", tail).replace(",", "").strip()
    if leftover:
        raise ValueError(f"cannot parse fibers {tail!r}")
    return SeifertIndex(v, g, tuple(fibers))


@dataclass(frozen=True)
class SeifertRepData:
    """omega = zeta_n^omega_exp; eigen_exps[j] holds n RootExponents of order n*alpha_j."""

    n: int
    omega_exp: int
    eigen_exps: tuple

    def __post_init__(self):
        object.__setattr__(self, "omega_exp", self.omega_exp % self.n)
        object.__setattr__(self, "eigen_exps", tuple(tuple(f) for f in self.eigen_exps))

    @property
    def omega(self) -> RootExponent:
        return RootExponent(self.n, self.omega_exp)

    def violations(self, index: SeifertIndex):
        out = []
        if len(self.eigen_exps) != index.m:
            out.append(f"need eigenvalues for {index.m} fibers, got {len(self.eigen_exps)}")
            return out
        for j, ((alpha, beta), eigs) in enumerate(zip(index.fibers, self.eigen_exps)):
            if len(eigs) != self.n:
                out.append(f"fiber {j}: need {self.n} eigenvalues")
            for e in eigs:
                if not (e**alpha * self.omega**beta).is_one():
                    out.append(f"fiber {j}: e^alpha * omega^beta != 1 for {e}")
        return out

    def validate(self, index):
        bad = self.violations(index)
        if bad:
            raise ValueError("invalid representation data: " + "; ".join(bad))
        return self

    def to_json(self):
        return {
            "n": self.n,
            "omega": self.omega_exp,
            "eigs": [[[e.order, e.exponent] for e in f] for f in self.eigen_exps],
        }

    @classmethod
    def from_json(cls, data):
        eigs = tuple(tuple(RootExponent(int(o), int(e)) for o, e in f) for f in data["eigs"])
        return cls(int(data["n"]), int(data["omega"]), eigs)


def mu_nu(alpha: int, beta: int) -> tuple[int, int]:
    """The unique (mu, nu) with alpha*nu - beta*mu = -1 and 0 < mu < alpha."""
    if alpha < 2 or gcd(alpha, beta) != 1:
        raise ValueError(f"no solution: need alpha >= 2 and gcd({alpha}, {beta}) = 1")
    mu = pow(beta, -1, alpha)
    nu, rem = divmod(beta * mu - 1, alpha)
    assert rem == 0 and 0 < mu < alpha
    return mu, nu


def valid_eigen_exponents(n, omega_exp, alpha, beta):
    """Exponents x (order n*alpha) with (zeta^x)^alpha * omega^beta = 1."""
    target = (-omega_exp * beta) % n
    return [x for x in range(n * alpha) if x % n == target]


def _twisted(index, rep):
    """x_{j,k} = omega^{nu_j} e_{j,k}^{mu_j} as RootExponents, per fiber."""
    out = []
    for (alpha, beta), eigs in zip(index.fibers, rep.eigen_exps):
        mu, nu = mu_nu(alpha, beta)
        out.append([rep.omega**nu * e**mu for e in eigs])
    return out


def _conductor(index, rep):
    return rep.n * lcm(1, *(a for a, _ in index.fibers))


@lru_cache(maxsize=None)
def _inv_root_minus_one(order, exponent):
    """1 / (zeta - 1) for zeta = zeta_order^exponent != 1, as (1/d) sum_i i zeta^i, d = ord(zeta)."""
    g = gcd(order, exponent)
    d, e = order // g, exponent // g
    if d == 1:
        raise ZeroDivisionError("zeta - 1 = 0")
    coeffs = [0] * d
    for i in range(1, d):
        coeffs[(i * e) % d] += i
    return CyclotomicNumber.from_poly(d, coeffs) / d


def seifert_torsion(index: SeifertIndex, rep: SeifertRepData) -> TorsionValue:
    """(omega-1)^{n(m+2g-2)} / prod_{j,k} (omega^{nu_j} e_{j,k}^{mu_j} - 1); 0 if not acyclic."""
    rep.validate(index)
    n_cond = _conductor(index, rep)
    xs = [x for fiber in _twisted(index, rep) for x in fiber]
    if any(x.is_one() for x in xs):
        return TorsionValue(CyclotomicNumber.rational(0, n_cond), acyclic=False)
    exp = rep.n * (index.m + 2 * index.genus - 2)
    value = (root_of_unity(rep.omega) - 1) ** exp
    if value.is_zero():
        return TorsionValue(CyclotomicNumber.rational(0, n_cond), acyclic=False)
    for x in xs:
        value = value * _inv_root_minus_one(x.order, x.exponent)
    return TorsionValue(value.lift(lcm(value.conductor, n_cond)), acyclic=True)


@dataclass(frozen=True)
class SeifertCertificate:
    """tau = (omega-1)^{n(2g-2)} * prod_j (-omega)^n prod_k G_j(x_{j,k}).

    G_j(x) = 1 + x + ... + x^{alpha_j - 1}, which equals (omega^{-1} - 1)/(x - 1)
    because x^{alpha_j} = omega^{-1}.  Every factor is a sum of roots of unity.
    """

    value: CyclotomicNumber
    fiber_factors: tuple
    integral: bool
    agrees: bool


def _geometric(x: RootExponent, alpha):
    total = CyclotomicNumber.rational(0, x.order)
    for i in range(alpha):
        total = total + root_of_unity(x**i)
    return total


def seifert_integrality_certificate(index, rep, direct=None) -> tuple[bool, SeifertCertificate]:
    """Recompute the torsion as a product of algebraic integers and compare.

    ``direct`` overrides the value from ``seifert_torsion`` (for fault injection).
    Raises CertificateMismatch when the two paths differ.
    """
    rep.validate(index)
    twisted = _twisted(index, rep)
    if any(x.is_one() for fiber in twisted for x in fiber):
        raise ValueError("certificate needs acyclic data (no vanishing denominator factor)")
    omega = root_of_unity(rep.omega)
    value = (omega - 1) ** (rep.n * (2 * index.genus - 2))
    factors = []
    for (alpha, _), fiber in zip(index.fibers, twisted):
        f = (-omega) ** rep.n
        for x in fiber:
            f = f * _geometric(x, alpha)
        factors.append(f)
        value = value * f
    if direct is None:
        direct = seifert_torsion(index, rep).value
    agrees = value == direct
    cert = SeifertCertificate(value, tuple(factors), value.is_algebraic_integer(), agrees)
    if not agrees:
        raise CertificateMismatch(f"factored value {value} differs from direct value {direct}")
    return cert.integral, cert


def random_seifert_input(rng, nmax=4, amax=7, mmax=3, gmax=3, acyclic=True, tries=1000):
    """Random valid (SeifertIndex, SeifertRepData); ``rng`` is a numpy Generator."""
    for _ in range(tries):
        n = int(rng.integers(2, nmax + 1))
        g = int(rng.integers(1, gmax + 1))
        m = int(rng.integers(0, mmax + 1))
        fibers = []
        while len(fibers) < m:
            a = int(rng.integers(2, amax + 1))
            b = int(rng.integers(-2 * a, 2 * a + 1))
            if gcd(a, b) == 1:
                fibers.append((a, b))
        k = int(rng.integers(0, n))
        eigs = []
        for a, b in fibers:
            allowed = valid_eigen_exponents(n, k, a, b)
            eigs.append(tuple(RootExponent(n * a, int(rng.choice(allowed))) for _ in range(n)))
        index = SeifertIndex(int(rng.integers(-3, 4)), g, tuple(fibers))
        rep = SeifertRepData(n, k, tuple(eigs))
        if not acyclic or seifert_torsion(index, rep).acyclic:
            return index, rep
    raise RuntimeError("no acyclic sample found")
