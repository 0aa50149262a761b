"""Components of the irreducible SL_n(C) character variety of a torus knot.

For an irreducible rho with X = rho(x), Y = rho(y), both matrices are
diagonalizable with X^p = Y^q = omega*I, omega = exp(2*pi*i*k/n).  Eigenvalues
of X are alpha = exp(2*pi*i*(k/n + a)/p) for a in Z/p, eigenvalues of Y are
beta = exp(2*pi*i*(k/n + b)/q) for b in Z/q.  A component is indexed by k and
the two exponent multisets.

Realizability criterion used here: exponents distinct within each list, every
multiplicity below n, v_i + w_j <= n for all pairs, and the two determinant
congruences sum(v_i a_i) + k = 0 mod p, sum(w_j b_j) + k = 0 mod q.  This is an
assumption beyond n = 3; it reproduces every count and dimension known for
n <= 3 and the maximal-dimension count for general n.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .cyclo import CyclotomicNumber, RootExponent, root_of_unity

__all__ = [
    "ComponentData",
    "InvalidIndexError",
    "SL2ComponentInfo",
    "TorusKnot",
    "component_dimension",
    "component_from_sl2",
    "count_components",
    "enumerate_components",
    "meridian_coeffs",
    "sl2_component_info",
    "sl2_index",
]


class InvalidIndexError(ValueError):
    pass


@dataclass(frozen=True)
class TorusKnot:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 2 or self.q < 2:
            raise ValueError("torus knot parameters must be at least 2")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"p={self.p} and q={self.q} are not coprime")

    def __str__(self):
        return f"K({self.p},{self.q})"


@dataclass(frozen=True, order=True)
class ComponentData:
    """One component: omega = zeta_n^k, eigen-exponents with multiplicities.

    ``a_list``/``b_list`` are sorted tuples of ``(exponent, multiplicity)``.
    Ordering of instances is lexicographic on ``(k, a_list, b_list)`` within a
    fixed knot and dimension.
    """

    p: int
    q: int
    n: int
    k: int
    a_list: tuple
    b_list: tuple

    def __post_init__(self):
        object.__setattr__(self, "a_list", tuple(sorted(tuple(x) for x in self.a_list)))
        object.__setattr__(self, "b_list", tuple(sorted(tuple(x) for x in self.b_list)))

    @property
    def sort_key(self):
        return (self.p, self.q, self.n, self.k, self.a_list, self.b_list)

    @property
    def knot(self):
        return TorusKnot(self.p, self.q)

    @property
    def conductor(self):
        return self.n * self.p * self.q

    @property
    def v(self):
        return tuple(m for _, m in self.a_list)

    @property
    def w(self):
        return tuple(m for _, m in self.b_list)

    @property
    def a_set(self):
        return frozenset(a for a, _ in self.a_list)

    @property
    def b_set(self):
        return frozenset(b for b, _ in self.b_list)

    def omega(self) -> RootExponent:
        return RootExponent(self.conductor, self.p * self.q * self.k)

    def alpha(self, a) -> RootExponent:
        """exp(2 pi i (k/n + a)/p) at order n*p*q."""
        return RootExponent(self.conductor, self.q * (self.k + self.n * a))

    def beta(self, b) -> RootExponent:
        return RootExponent(self.conductor, self.p * (self.k + self.n * b))

    def alphas(self):
        """Eigenvalues of X with repetition, as RootExponents."""
        return [self.alpha(a) for a, m in self.a_list for _ in range(m)]

    def betas(self):
        return [self.beta(b) for b, m in self.b_list for _ in range(m)]

    def unit_multiplicities(self):
        """Multiplicities (v0, w0) of the eigenvalue 1 in X and Y."""
        if self.k:
            return 0, 0
        return dict(self.a_list).get(0, 0), dict(self.b_list).get(0, 0)

    def is_acyclic(self):
        """Twisted cohomology vanishes.

        For omega != 1 this always holds.  For omega = 1 the cocycle equations
        (1 + X + ... + X^{p-1}) u = (1 + Y + ... + Y^{q-1}) v give
        dim H^1 = n - v0 - w0, so the component is acyclic exactly when
        v0 + w0 = n (possible from n = 4 on).
        """
        if self.k % self.n:
            return True
        v0, w0 = self.unit_multiplicities()
        return v0 + w0 == self.n

    def violations(self):
        """List of broken invariants, empty when the data is a valid component."""
        out = []
        p, q, n = self.p, self.q, self.n
        if n < 2:
            out.append("n must be at least 2")
        if p < 2 or q < 2 or gcd(p, q) != 1:
            out.append("p, q must be coprime and at least 2")
        if not 0 <= self.k < n:
            out.append("k must lie in [0, n)")
        for name, lst, mod in (("a", self.a_list, p), ("b", self.b_list, q)):
            exps = [e for e, _ in lst]
            if any(not 0 <= e < mod for e in exps):
                out.append(f"{name} exponents must lie in [0, {mod})")
            if len(set(exps)) != len(exps):
                out.append(f"{name} exponents must be distinct")
            mults = [m for _, m in lst]
            if any(m < 1 for m in mults):
                out.append(f"{name} multiplicities must be positive")
            if sum(mults) != n:
                out.append(f"{name} multiplicities must sum to n")
            if any(m >= n for m in mults):
                out.append(f"{name} multiplicities must be below n")
            if (sum(e * m for e, m in lst) + self.k) % mod:
                out.append(f"determinant condition fails for {name}")
        if self.v and self.w and max(self.v) + max(self.w) > n:
            out.append("v_i + w_j exceeds n (reducible)")
        return out

    def validate(self):
        bad = self.violations()
        if bad:
            raise ValueError("invalid component: " + "; ".join(bad))
        return self

    def dimension(self):
        return component_dimension(self)

    def to_json(self):
        return {
            "p": self.p,
            "q": self.q,
            "n": self.n,
            "k": self.k,
            "a": [{"exp": e, "mult": m} for e, m in self.a_list],
            "b": [{"exp": e, "mult": m} for e, m in self.b_list],
            "dim": self.dimension(),
        }

    @classmethod
    def from_json(cls, data):
        c = cls(
            p=int(data["p"]),
            q=int(data["q"]),
            n=int(data["n"]),
            k=int(data["k"]),
            a_list=tuple((int(d["exp"]), int(d["mult"])) for d in data["a"]),
            b_list=tuple((int(d["exp"]), int(d["mult"])) for d in data["b"]),
        )
        c.validate()
        if "dim" in data and int(data["dim"]) != c.dimension():
            raise ValueError("stored dimension does not match the data")
        return c


def _exponent_lists(modulus, n):
    """All sorted ((exp, mult), ...) with distinct exps, mults in [1, n), total n."""
    out = []

    def rec(start, remaining, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for e in range(start, modulus):
            for m in range(1, min(remaining, n - 1) + 1):
                acc.append((e, m))
                rec(e + 1, remaining - m, acc)
                acc.pop()

    rec(0, n, [])
    return out


def enumerate_components(knot: TorusKnot, n: int) -> list[ComponentData]:
    """Every component of the irreducible SL_n character variety, sorted."""
    if n < 2:
        raise ValueError("n must be at least 2")
    p, q = knot.p, knot.q
    a_lists = _exponent_lists(p, n)
    b_lists = _exponent_lists(q, n)
    by_residue_a, by_residue_b = {}, {}
    for lst in a_lists:
        by_residue_a.setdefault(sum(e * m for e, m in lst) % p, []).append(lst)
    for lst in b_lists:
        by_residue_b.setdefault(sum(e * m for e, m in lst) % q, []).append(lst)
    out = []
    for k in range(n):
        for a_list in sorted(by_residue_a.get((-k) % p, [])):
            vmax = max(m for _, m in a_list)
            for b_list in sorted(by_residue_b.get((-k) % q, [])):
                if vmax + max(m for _, m in b_list) <= n:
                    out.append(ComponentData(p, q, n, k, a_list, b_list))
    return out


def component_dimension(c: ComponentData) -> int:
    """n^2 + 1 - sum v_i^2 - sum w_j^2."""
    return c.n * c.n + 1 - sum(m * m for m in c.v) - sum(m * m for m in c.w)


def count_components(knot: TorusKnot, n: int, dimension: int | None = None) -> int:
    comps = enumerate_components(knot, n)
    if dimension is None:
        return len(comps)
    return sum(1 for c in comps if component_dimension(c) == dimension)


def meridian_coeffs(knot: TorusKnot) -> tuple[int, int]:
    """The unique (r, s) with p*s - q*r = 1 and 0 < s <= q."""
    p, q = knot.p, knot.q
    s = pow(p, -1, q)
    if s == 0:
        s = q
    r, rem = divmod(p * s - 1, q)
    assert rem == 0
    return r, s


@dataclass(frozen=True)
class SL2ComponentInfo:
    p: int
    q: int
    a: int
    b: int
    trace_x: CyclotomicNumber
    trace_y: CyclotomicNumber
    excluded_traces: tuple
    meridian: tuple


def _check_sl2_index(knot, a, b):
    if not (0 < a < knot.p and 0 < b < knot.q and (a - b) % 2 == 0):
        raise InvalidIndexError(
            f"(a, b) = ({a}, {b}) is not an SL(2) component index for {knot}: "
            "need 0 < a < p, 0 < b < q and a = b mod 2"
        )


def sl2_component_info(knot: TorusKnot, a: int, b: int) -> SL2ComponentInfo:
    _check_sl2_index(knot, a, b)
    p, q = knot.p, knot.q
    r, s = meridian_coeffs(knot)

    def two_cos(order, e):
        return root_of_unity(order, e) + root_of_unity(order, -e)

    n = 2 * p * q
    excluded = (two_cos(n, q * r * a + p * s * b), two_cos(n, q * r * a - p * s * b))
    return SL2ComponentInfo(
        p=p,
        q=q,
        a=a,
        b=b,
        trace_x=two_cos(2 * p, a),
        trace_y=two_cos(2 * q, b),
        excluded_traces=excluded,
        meridian=(r, s),
    )


def sl2_index(c: ComponentData) -> tuple[int, int]:
    """The (a, b) pair labelling an n = 2 component by its traces."""
    if c.n != 2:
        raise ValueError("SL(2) labels exist only for n = 2")

    def label(exps, mod):
        e = (c.k + 2 * exps[0]) % (2 * mod)
        return e if e < mod else 2 * mod - e

    return label([e for e, _ in c.a_list], c.p), label([e for e, _ in c.b_list], c.q)


def component_from_sl2(knot: TorusKnot, a: int, b: int) -> ComponentData:
    _check_sl2_index(knot, a, b)
    p, q = knot.p, knot.q
    k = a % 2
    a_exps = sorted({((a - k) // 2) % p, ((2 * p - a - k) // 2) % p})
    b_exps = sorted({((b - k) // 2) % q, ((2 * q - b - k) // 2) % q})
    return ComponentData(p, q, 2, k, tuple((e, 1) for e in a_exps), tuple((e, 1) for e in b_exps)).validate()
