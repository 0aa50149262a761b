"""Verification suites shared by the CLI ``verify`` command and the test suite.

Each suite returns a SuiteResult: a list of named checks with a pass flag and a
short detail string, in a fixed order.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd

import numpy as np

from .charvar import TorusKnot, count_components, enumerate_components, sl2_index
from .golden import GOLDEN_CASES
from .oracle import compare_component
from .powersum import full_sin_power_sum, odd_sin_power_sum, powersum_grid, verlinde_rank
from .seifert import (
    CertificateMismatch,
    SeifertIndex,
    SeifertRepData,
    random_seifert_input,
    seifert_integrality_certificate,
    seifert_torsion,
)
from .cyclo import RootExponent
from .tap import tap_polynomial
from .torsion import sl2_torsion, torsion_from_component

SUITES = ("examples", "counting", "integrality", "oracle", "lemmas", "powersum", "seifert", "sl2")


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self):
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class SuiteResult:
    suite: str
    checks: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    @property
    def failures(self):
        return [c for c in self.checks if not c.passed]

    def add(self, name, passed, detail=""):
        self.checks.append(Check(name, bool(passed), detail))

    def to_json(self, include_passing=True):
        rows = self.checks if include_passing else self.failures
        return {
            "suite": self.suite,
            "passed": self.passed,
            "total": len(self.checks),
            "failed": len(self.failures),
            "checks": [c.to_json() for c in rows],
        }

    def table(self, include_passing=True):
        lines = [f"suite {self.suite}: {len(self.checks) - len(self.failures)}/{len(self.checks)} passed"]
        for c in self.checks:
            if include_passing or not c.passed:
                mark = "PASS" if c.passed else "FAIL"
                lines.append(f"  {mark}  {c.name}" + (f"  ({c.detail})" if c.detail else ""))
        return "\n".join(lines)


def coprime_pairs(lo, hi, strict=True):
    return [
        (p, q)
        for p in range(lo, hi + 1)
        for q in range(p + 1 if strict else lo, hi + 1)
        if gcd(p, q) == 1
    ]


def _timed(fn):
    def run(*args, **kw):
        t = time.perf_counter()
        res = fn(*args, **kw)
        res.seconds = time.perf_counter() - t
        return res

    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


@_timed
def suite_examples():
    """Golden polynomials for K(2,3), K(2,5) and K(3,4)."""
    res = SuiteResult("examples")
    for case in GOLDEN_CASES:
        got = tap_polynomial(case.knot, case.component())
        want = case.expected()
        res.add(case.name, got == want, "" if got == want else f"got {got.format(True)}")
    return res


@_timed
def suite_counting(sl2_max=12, n3_max=9):
    res = SuiteResult("counting")
    for p, q in coprime_pairs(2, sl2_max):
        got = count_components(TorusKnot(p, q), 2)
        res.add(f"sl2 K({p},{q})", got == (p - 1) * (q - 1) // 2, f"{got}")
    for p, q in coprime_pairs(2, n3_max):
        knot = TorusKnot(p, q)
        comps = enumerate_components(knot, 3)
        top = sum(1 for c in comps if c.dimension() == 4)
        two = sum(1 for c in comps if c.dimension() == 2)
        want_top = Fraction(comb(p - 1, 2) * comb(q - 1, 2), 3)
        want_two = Fraction((p - 1) * (q - 1) * (p + q - 4), 2)
        res.add(f"n=3 max-dim K({p},{q})", top == want_top, f"{top} vs {want_top}")
        res.add(f"n=3 dim-2 K({p},{q})", two == want_two, f"{two} vs {want_two}")
        if p == 3:
            res.add(f"p=3 split K(3,{q})", (top, two) == ((q - 1) * (q - 2) // 6, (q - 1) ** 2), f"{top}, {two}")
    return res


def _small_grid(nmax=4, pqmax=7):
    for n in range(2, nmax + 1):
        for p, q in coprime_pairs(2, pqmax):
            knot = TorusKnot(p, q)
            for i, c in enumerate(enumerate_components(knot, n)):
                yield n, knot, i, c


@_timed
def suite_integrality(nmax=4, pqmax=7):
    """Every coefficient and every torsion value lies in Z[zeta]; one check per (knot, n)."""
    res = SuiteResult("integrality")
    bad = {}
    count = {}
    for n, knot, i, c in _small_grid(nmax, pqmax):
        key = (knot.p, knot.q, n)
        count[key] = count.get(key, 0) + 1
        poly = tap_polynomial(knot, c)
        ok = all(v.is_algebraic_integer() for _, v in poly.items())
        ok = ok and torsion_from_component(knot, c).value.is_algebraic_integer()
        if not ok:
            bad.setdefault(key, []).append(i)
    for key in sorted(count):
        p, q, n = key
        res.add(f"K({p},{q}) n={n}", key not in bad, f"{count[key]} components, bad {bad.get(key, [])}")
    return res


@_timed
def suite_oracle(nmax=4, pqmax=7, trials=20, seed=0, tol=1e-9):
    res = SuiteResult("oracle")
    worst = {}
    bad = {}
    for n, knot, i, c in _small_grid(nmax, pqmax):
        key = (knot.p, knot.q, n)
        r = compare_component(knot, c, trials=trials, seed=seed, tol=tol, index=i)
        worst[key] = max(worst.get(key, 0.0), r.max_rel_error)
        if not r.passed:
            bad.setdefault(key, []).append(i)
    for key in sorted(worst):
        p, q, n = key
        res.add(f"K({p},{q}) n={n}", key not in bad, f"max rel err {worst[key]:.2e}, bad {bad.get(key, [])}")
    return res


@_timed
def suite_lemmas(pmax=10, mmax=12, vmax=16):
    res = SuiteResult("lemmas")
    for p in range(2, pmax + 1):
        for m in range(0, mmax + 1):
            lhs, rhs = odd_sin_power_sum(p, m)
            res.add(f"odd-angle sum p={p} m={m}", lhs == rhs, f"{lhs} vs {rhs}")
            lhs, rhs = full_sin_power_sum(p, m)
            res.add(f"full-angle sum p={p} m={m}", lhs == rhs, f"{lhs} vs {rhs}")
    for p in range(3, vmax + 1):
        for m in range(-1, 7):
            r = verlinde_rank(p, m)
            res.add(f"verlinde integral p={p} m={m}", r.denominator == 1, f"{r}")
    for q in range(3, vmax + 1, 2):
        for m in range(-1, 7):
            lhs, rhs = verlinde_rank(2 * q, m), 2 ** (m + 1) * verlinde_rank(q, m)
            res.add(f"verlinde doubling q={q} m={m}", lhs == rhs, f"{lhs} vs {rhs}")
    return res


@_timed
def suite_powersum(qmax=9, mmax=5):
    res = SuiteResult("powersum")
    for r in powersum_grid(qmax, range(0, mmax + 1)):
        tag = f"{r.kind} K({r.p},{r.q}) m={r.m}"
        res.add(tag, r.passes, f"closed {r.closed_form}, brute {r.brute_force}, scale {r.integrality_scale}")
        for name, ok in sorted(r.checks.items()):
            res.add(f"{tag} {name}", ok)
    return res


@_timed
def suite_seifert(samples=200, seed=0):
    res = SuiteResult("seifert")
    hand = seifert_torsion(
        SeifertIndex(0, 1, ((2, 1),)),
        SeifertRepData(2, 1, ((RootExponent(4, 1), RootExponent(4, 3)),)),
    )
    res.add("hand case g=1 (2,1) n=2 omega=-1", hand.value == 2, str(hand.value))
    rng = np.random.default_rng(seed)
    for i in range(samples):
        index, rep = random_seifert_input(rng)
        try:
            integral, cert = seifert_integrality_certificate(index, rep)
            res.add(f"sample {i} [{index}] n={rep.n}", integral and cert.agrees)
        except CertificateMismatch as exc:
            res.add(f"sample {i} [{index}] n={rep.n}", False, str(exc))
    return res


@_timed
def suite_sl2(pqmax=11):
    res = SuiteResult("sl2")
    for p, q in coprime_pairs(2, pqmax):
        knot = TorusKnot(p, q)
        bad = []
        comps = enumerate_components(knot, 2)
        for c in comps:
            a, b = sl2_index(c)
            if torsion_from_component(knot, c).value != sl2_torsion(knot, a, b).value:
                bad.append((a, b))
        res.add(f"K({p},{q})", not bad, f"{len(comps)} components, bad {bad}")
    return res


_RUNNERS = {
    "examples": suite_examples,
    "counting": suite_counting,
    "integrality": suite_integrality,
    "oracle": suite_oracle,
    "lemmas": suite_lemmas,
    "powersum": suite_powersum,
    "seifert": suite_seifert,
    "sl2": suite_sl2,
}


def run_suite(name, **kw) -> SuiteResult:
    if name not in _RUNNERS:
        raise ValueError(f"unknown suite {name!r}; expected one of {SUITES}")
    return _RUNNERS[name](**kw)
