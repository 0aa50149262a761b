"""Numerical check of the closed form against Wada's determinant ratio.

The knot group is presented as <x, y | x^p y^{-q}> with abelianization
x -> t^q, y -> t^p.  For explicit matrices X, Y the twisted Alexander
polynomial is det Phi(dr/dx) / det Phi(y - 1) (column y removed) or
det Phi(dr/dy) / det Phi(x - 1) (column x removed), where dr/dg is the Fox
derivative.  All matrix work is complex double-double (about 32 digits).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import mpmath
import numpy as np

from .charvar import ComponentData, TorusKnot, enumerate_components
from .kernels import ddarith as dd
from .kernels import ddlinalg
from .tap import tap_closed_form

__all__ = [
    "FoxWord",
    "NumericRep",
    "OracleReport",
    "build_numeric_rep",
    "compare_component",
    "compare_components",
    "fox_derivative",
    "relator",
    "wada_value",
]

GENERATORS = ("x", "y")
# index of each signed letter in the generator stack handed to the kernels
_LETTER_INDEX = {("x", 1): 0, ("x", -1): 1, ("y", 1): 2, ("y", -1): 3}


@dataclass(frozen=True)
class FoxWord:
    """A word in x, y and their inverses, stored as ((symbol, +-1), ...)."""

    letters: tuple = ()

    def __post_init__(self):
        letters = tuple((str(g), int(s)) for g, s in self.letters)
        for g, s in letters:
            if g not in GENERATORS or s not in (1, -1):
                raise ValueError(f"bad letter {(g, s)!r}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def power(cls, gen, k):
        s = 1 if k >= 0 else -1
        return cls(((gen, s),) * abs(k))

    def __mul__(self, other):
        return FoxWord(self.letters + other.letters)

    def __len__(self):
        return len(self.letters)

    def reduced(self):
        out = []
        for g, s in self.letters:
            if out and out[-1] == (g, -s):
                out.pop()
            else:
                out.append((g, s))
        return FoxWord(tuple(out))

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(g if s == 1 else f"{g}^-1" for g, s in self.letters)


def relator(knot: TorusKnot) -> FoxWord:
    """x^p y^{-q}"""
    return FoxWord.power("x", knot.p) * FoxWord.power("y", -knot.q)


def fox_derivative(word: FoxWord, gen: str) -> dict:
    """Formal sum {FoxWord: integer coefficient} of d(word)/d(gen).

    d(uv) = du + u dv, dg/dg = 1, d(g^-1)/dg = -g^-1, dh/dg = 0.
    Words are freely reduced before collecting terms.
    """
    if gen not in GENERATORS:
        raise ValueError(f"unknown generator {gen!r}")
    out = {}
    for i, (g, s) in enumerate(word.letters):
        if g != gen:
            continue
        if s == 1:
            term, c = FoxWord(word.letters[:i]), 1
        else:
            term, c = FoxWord(word.letters[: i + 1]), -1
        term = term.reduced()
        out[term] = out.get(term, 0) + c
    return {w: c for w, c in out.items() if c}


def _pack(terms: dict):
    """Formal sum -> (coeffs, words, lengths) arrays for the word_sum kernel."""
    items = sorted(terms.items(), key=lambda kv: (len(kv[0]), kv[0].letters))
    width = max([len(w) for w, _ in items] + [1])
    coeffs = np.array([float(c) for _, c in items])
    words = np.zeros((len(items), width), dtype=np.int64)
    lengths = np.zeros(len(items), dtype=np.int64)
    for r, (w, _) in enumerate(items):
        lengths[r] = len(w)
        for j, letter in enumerate(w.letters):
            words[r, j] = _LETTER_INDEX[letter]
    return coeffs, words, lengths


@dataclass
class NumericRep:
    """X diagonal, Y = C diag(beta) C^{-1}; double-double planes kept alongside."""

    n: int
    X: np.ndarray
    Y: np.ndarray
    seed: int
    x_dd: np.ndarray = field(repr=False, default=None)
    x_inv_dd: np.ndarray = field(repr=False, default=None)
    y_dd: np.ndarray = field(repr=False, default=None)
    y_inv_dd: np.ndarray = field(repr=False, default=None)

    def check(self, p, q, tol=1e-12):
        """Residuals of X^p = Y^q = omega I and det X = det Y = 1."""
        xp = np.linalg.matrix_power(self.X, p)
        yq = np.linalg.matrix_power(self.Y, q)
        return {
            "power_mismatch": float(np.abs(xp - yq).max()),
            "scalar_mismatch": float(np.abs(xp - xp[0, 0] * np.eye(self.n)).max()),
            "det_x": float(abs(np.linalg.det(self.X) - 1)),
            "det_y": float(abs(np.linalg.det(self.Y) - 1)),
            "ok": bool(
                np.abs(xp - yq).max() < tol
                and abs(np.linalg.det(self.X) - 1) < tol
                and abs(np.linalg.det(self.Y) - 1) < tol
            ),
        }


def _root(order, exponent):
    with mpmath.workprec(160):
        return mpmath.expjpi(2 * mpmath.mpf(exponent) / order)


def _conjugator(rng, n, max_cond=1e3):
    while True:
        c = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        if np.linalg.cond(c) <= max_cond:
            return c


def build_numeric_rep(knot: TorusKnot, c: ComponentData, seed=0, alphas=None, betas=None) -> NumericRep:
    """Matrices realizing the eigenvalue data of ``c``.

    ``alphas``/``betas`` override the eigenvalues (RootExponents); used to
    build deliberately wrong representations in tests.
    """
    alphas = list(c.alphas() if alphas is None else alphas)
    betas = list(c.betas() if betas is None else betas)
    n = c.n
    a_mp = [_root(r.order, r.exponent) for r in alphas]
    b_mp = [_root(r.order, r.exponent) for r in betas]
    x_dd = dd.diagonal(a_mp)
    x_inv_dd = dd.diagonal([1 / z for z in a_mp])
    rng = np.random.default_rng(seed)
    cmat = dd.matrix_from_complex(_conjugator(rng, n))
    c_inv = ddlinalg.inverse(cmat)
    y_dd = ddlinalg.matmul(ddlinalg.matmul(cmat, dd.diagonal(b_mp)), c_inv)
    y_inv_dd = ddlinalg.matmul(ddlinalg.matmul(cmat, dd.diagonal([1 / z for z in b_mp])), c_inv)
    to_c = lambda m: (m[0] + m[1]) + 1j * (m[2] + m[3])  # noqa: E731
    return NumericRep(n, to_c(x_dd), to_c(y_dd), seed, x_dd, x_inv_dd, y_dd, y_inv_dd)


def _scalar(z):
    """Complex (or mpc) -> double-double 4-vector."""
    return dd.from_mpc(z)


def _generator_stack(rep: NumericRep, knot: TorusKnot, t0_dd):
    """[Phi(x), Phi(x^-1), Phi(y), Phi(y^-1)] at t0."""
    p, q = knot.p, knot.q
    tq = dd.cpow(tuple(t0_dd), q)
    tp = dd.cpow(tuple(t0_dd), p)
    tq_inv = dd.cpow(tuple(t0_dd), -q)
    tp_inv = dd.cpow(tuple(t0_dd), -p)
    return np.ascontiguousarray(
        np.stack(
            [
                dd.scale(np.array(tq), rep.x_dd),
                dd.scale(np.array(tq_inv), rep.x_inv_dd),
                dd.scale(np.array(tp), rep.y_dd),
                dd.scale(np.array(tp_inv), rep.y_inv_dd),
            ]
        )
    )


def _fox_tables(knot: TorusKnot):
    r = relator(knot)
    gen_minus_one = {
        g: {FoxWord(((g, 1),)): 1, FoxWord(): -1} for g in GENERATORS
    }
    return {
        "y": (_pack(fox_derivative(r, "x")), _pack(gen_minus_one["y"])),
        "x": (_pack(fox_derivative(r, "y")), _pack(gen_minus_one["x"])),
    }


def _wada_dd(tables, gens, column):
    (num_c, num_w, num_l), (den_c, den_w, den_l) = tables[column]
    num = ddlinalg.det(ddlinalg.word_sum(num_c, num_w, num_l, gens))
    den = ddlinalg.det(ddlinalg.word_sum(den_c, den_w, den_l, gens))
    return num, den


def wada_value(rep: NumericRep, knot: TorusKnot, column: str, t0) -> mpmath.mpc:
    """Determinant ratio with the given generator's column removed ('x' or 'y')."""
    if column not in GENERATORS:
        raise ValueError("column must be 'x' or 'y'")
    gens = _generator_stack(rep, knot, _scalar(t0))
    num, den = _wada_dd(_fox_tables(knot), gens, column)
    if den[0] == 0.0 and den[2] == 0.0:
        raise ZeroDivisionError("singular denominator at t0")
    return dd.to_mpc(np.array(dd.cdiv(*num, *den)))


def _closed_form_dd(form, t0s):
    """Closed form at many t0 at once (double-double, vectorized over t0)."""
    t = dd.from_complex(t0s)
    shape = t0s.shape

    def factor_product(factors):
        acc = (np.ones(shape), np.zeros(shape), np.zeros(shape), np.zeros(shape))
        for f in factors:
            z = _scalar(_root(f.scalar.order, f.scalar.exponent))
            zt = dd.cmul(*[np.full(shape, v) for v in z], *dd.cpow(t, f.t_power))
            base = dd.cadd(*zt, -np.ones(shape), np.zeros(shape), np.zeros(shape), np.zeros(shape))
            acc = dd.cmul(*acc, *dd.cpow(base, f.multiplicity))
        return acc

    num = factor_product(form.numerator_factors)
    den = factor_product(form.denominator_factors)
    return num, den


@dataclass
class OracleReport:
    p: int
    q: int
    n: int
    index: int
    component: ComponentData
    trials: int
    max_rel_error: float
    tol: float
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures and self.max_rel_error < self.tol

    def to_json(self):
        return {
            "p": self.p,
            "q": self.q,
            "n": self.n,
            "index": self.index,
            "component": self.component.to_json(),
            "trials": self.trials,
            "max_rel_error": self.max_rel_error,
            "tol": self.tol,
            "passed": self.passed,
            "failures": self.failures,
        }


# points closer than this to the unit circle are resampled: all zeros and
# poles of the closed form are roots of unity
_CIRCLE_GAP = 0.05


def _sample_t0(rng, trials):
    out = []
    while len(out) < trials:
        r = float(np.exp(rng.uniform(np.log(0.5), np.log(2.0))))
        if abs(r - 1.0) < _CIRCLE_GAP or not 0.5 < r < 2.0:
            continue
        theta = float(rng.uniform(0.0, 2 * np.pi))
        out.append(r * np.exp(1j * theta))
    return np.array(out)


def compare_component(knot, c, trials=20, seed=0, tol=1e-9, index=0, rep=None) -> OracleReport:
    """Relative error of the Wada ratio (column y) against the closed form.

    Random streams are derived from (seed, index): the conjugator uses
    [seed, index, 0] and the sample points use [seed, index, 1].
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if rep is None:
        rep = build_numeric_rep(knot, c, seed=np.random.SeedSequence([seed, index, 0]))
    t0s = _sample_t0(np.random.default_rng([seed, index, 1]), trials)
    form = tap_closed_form(knot, c)
    cnum, cden = _closed_form_dd(form, t0s)
    tables = _fox_tables(knot)
    worst = 0.0
    failures = []
    for i, t0 in enumerate(t0s):
        gens = _generator_stack(rep, knot, _scalar(complex(t0)))
        num, den = _wada_dd(tables, gens, "y")
        # cross-multiplied comparison avoids two divisions
        lhs = dd.to_complex(dd.cmul(*num, cden[0][i], cden[1][i], cden[2][i], cden[3][i]))
        rhs = dd.to_complex(dd.cmul(*den, cnum[0][i], cnum[1][i], cnum[2][i], cnum[3][i]))
        scale = abs(rhs)
        if scale == 0.0:
            failures.append({"trial": i, "t0": [t0.real, t0.imag], "reason": "closed form vanishes"})
            continue
        err = float(abs(lhs - rhs) / scale)
        worst = max(worst, err)
        if not err < tol:
            failures.append({"trial": i, "t0": [t0.real, t0.imag], "rel_error": err})
    return OracleReport(knot.p, knot.q, c.n, index, c, trials, worst, tol, failures)


def compare_components(knot: TorusKnot, n: int, trials=20, seed=0, tol=1e-9):
    return [
        compare_component(knot, c, trials=trials, seed=seed, tol=tol, index=i)
        for i, c in enumerate(enumerate_components(knot, n))
    ]
