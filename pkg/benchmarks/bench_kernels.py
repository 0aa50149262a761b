"""Numba vs numpy timings for the hot kernels.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Both backends are imported directly, so the TORUSTAP_DISABLE_NUMBA switch
does not matter here.  Outputs are compared before timing.
"""

import argparse
import time

import numpy as np

from torustap.charvar import TorusKnot, enumerate_components
from torustap.cyclo import _field
from torustap.kernels import binomial, ddlinalg
from torustap.oracle import _fox_tables, _generator_stack, _scalar, build_numeric_rep
from torustap.tap import expansion_factors


def best_of(fn, repeat):
    fn()  # warm-up (jit compile)
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def binomial_case():
    knot = TorusKnot(5, 7)
    c = max(enumerate_components(knot, 4), key=lambda c: c.dimension())
    rows = np.array(expansion_factors(knot, c), dtype=np.int64)
    n = c.conductor
    red = _field(n).reduction_matrix()
    a = binomial.expand_binomials_numba(rows, n)
    b = binomial.expand_binomials_numpy(rows, n)
    assert np.array_equal(a, b)
    return {
        "numba": lambda: binomial.reduce_rows(binomial.expand_binomials_numba(rows, n), red),
        "numpy": lambda: binomial.reduce_rows(binomial.expand_binomials_numpy(rows, n), red),
    }


def wada_case():
    knot = TorusKnot(5, 7)
    c = enumerate_components(knot, 4)[0]
    rep = build_numeric_rep(knot, c, seed=1)
    gens = _generator_stack(rep, knot, _scalar(1.3 + 0.4j))
    (nc, nw, nl), _ = _fox_tables(knot)["y"]

    def run(word_sum, det):
        return lambda: det(word_sum(nc, nw, nl, gens))

    a = run(ddlinalg.word_sum_numba, ddlinalg.det_numba)()
    b = run(ddlinalg.word_sum_numpy, ddlinalg.det_numpy)()
    assert np.allclose(np.asarray(a), np.asarray(b), rtol=0, atol=1e-20 + 1e-28 * abs(np.asarray(a)).max())
    return {
        "numba": run(ddlinalg.word_sum_numba, ddlinalg.det_numba),
        "numpy": run(ddlinalg.word_sum_numpy, ddlinalg.det_numpy),
    }


def matmul_case(n=4, batch=200):
    rng = np.random.default_rng(0)
    ms = [np.ascontiguousarray(rng.standard_normal((4, n, n))) for _ in range(batch)]

    def run(matmul):
        def go():
            acc = ms[0]
            for m in ms[1:]:
                acc = matmul(acc, m)
            return acc

        return go

    return {"numba": run(ddlinalg.matmul_numba), "numpy": run(ddlinalg.matmul_numpy)}


CASES = {"binomial K(5,7) n=4": binomial_case, "fox+det K(5,7) n=4": wada_case, "dd matmul 4x4 chain": matmul_case}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    print(f"{'kernel':24s} {'numba':>12s} {'numpy':>12s} {'speedup':>8s}")
    for name, make in CASES.items():
        fns = make()
        tn = best_of(fns["numba"], args.repeat)
        tp = best_of(fns["numpy"], args.repeat)
        print(f"{name:24s} {tn * 1e3:10.3f}ms {tp * 1e3:10.3f}ms {tp / tn:7.1f}x")


if __name__ == "__main__":
    main()
