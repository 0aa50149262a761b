"""Command-line entry point: ``torustap <subcommand> ...``.

Exit codes: 0 success, 1 a check failed, 2 bad usage or invalid input.
Output goes to stdout unless ``--output`` is given.  JSON output is
deterministic for fixed inputs and seed.  Colored pass/fail marks in text
tables are controlled by NO_COLOR / TORUSTAP_COLOR only.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .charvar import InvalidIndexError, TorusKnot, enumerate_components, sl2_index
from .cyclo import RootExponent
from .oracle import compare_component
from .powersum import power_sum
from .seifert import SeifertRepData, parse_seifert_index, seifert_integrality_certificate, seifert_torsion
from .tap import expansion_sign, tap_closed_form, tap_polynomial
from .torsion import adjoint_torsion, certify_torsion_integrality, torsion_from_component
from .verify import SUITES, run_suite

DEFAULT_SEED = 20240611
FORMATS = ("json", "pretty", "factored")


class UsageError(Exception):
    pass


def _color_enabled(stream):
    forced = os.environ.get("TORUSTAP_COLOR")
    if forced is not None:
        return forced not in ("", "0", "no", "false")
    if "NO_COLOR" in os.environ:
        return False
    return hasattr(stream, "isatty") and stream.isatty()


def _dump(obj):
    return json.dumps(obj, indent=2) + "\n"


def _components(args):
    if args.n < 2:
        raise UsageError("n must be at least 2")
    knot = TorusKnot(args.p, args.q)
    comps = enumerate_components(knot, args.n)
    index = getattr(args, "component", None)
    if index is not None:
        if not 0 <= index < len(comps):
            raise UsageError(f"component index {index} out of range (0..{len(comps) - 1})")
        return knot, [(index, comps[index])]
    return knot, list(enumerate(comps))


def cmd_components(args):
    knot, comps = _components(args)
    if args.dim is not None:
        comps = [(i, c) for i, c in comps if c.dimension() == args.dim]
    if args.format == "json":
        return 0, _dump([dict(index=i, **c.to_json()) for i, c in comps])
    lines = []
    for i, c in comps:
        a = " ".join(f"{e}^{m}" if m > 1 else str(e) for e, m in c.a_list)
        b = " ".join(f"{e}^{m}" if m > 1 else str(e) for e, m in c.b_list)
        lines.append(f"{i:4d}  k={c.k}  a=[{a}]  b=[{b}]  dim={c.dimension()}")
    return 0, "\n".join(lines) + "\n"


def cmd_tap(args):
    knot, comps = _components(args)
    if args.format == "json":
        out = []
        for i, c in comps:
            out.append(
                {
                    "index": i,
                    "component": c.to_json(),
                    "polynomial": tap_polynomial(knot, c).to_json(),
                    "closed_form": tap_closed_form(knot, c).to_json(),
                    "sign": expansion_sign(knot, c),
                }
            )
        return 0, _dump(out)
    lines = []
    for _, c in comps:
        if args.format == "pretty":
            lines.append(tap_polynomial(knot, c).format(descending=True))
        else:
            sign = "-" if expansion_sign(knot, c) < 0 else ""
            lines.append(sign + tap_closed_form(knot, c).format())
    return 0, "\n".join(lines) + "\n"


def cmd_torsion(args):
    if args.adjoint and args.n != 2:
        raise UsageError("--adjoint needs --n 2")
    knot, comps = _components(args)
    out = []
    for i, c in comps:
        if args.adjoint:
            a, b = sl2_index(c)
            tv = adjoint_torsion(knot, a, b)
        else:
            tv = torsion_from_component(knot, c)
        row = {"index": i, "component": c.to_json()}
        row.update(tv.to_json())
        row["algebraic_integer"] = certify_torsion_integrality(tv)
        out.append(row)
    if args.format == "json":
        return 0, _dump(out)
    lines = [f"{r['index']:4d}  {r['value']}  ~ {complex(*r['float']):.12g}  acyclic={r['acyclic']}" for r in out]
    return 0, "\n".join(lines) + "\n"


def _read_eigs(path, index, n):
    with open(path) as fh:
        data = json.load(fh)
    if isinstance(data, dict):
        data = data["eigs"]
    if len(data) != index.m:
        raise UsageError(f"eigenvalue file lists {len(data)} fibers, index has {index.m}")
    eigs = []
    for (alpha, _), fiber in zip(index.fibers, data):
        row = []
        for e in fiber:
            # a bare integer is an exponent of zeta_{n*alpha}
            row.append(RootExponent(n * alpha, int(e)) if isinstance(e, int) else RootExponent(int(e[0]), int(e[1])))
        eigs.append(tuple(row))
    return tuple(eigs)


def cmd_seifert(args):
    index = parse_seifert_index(args.index)
    rep = SeifertRepData(args.n, args.omega, _read_eigs(args.eigs, index, args.n))
    rep.validate(index)
    tv = seifert_torsion(index, rep)
    out = {"index": str(index), "rep": rep.to_json()}
    out.update(tv.to_json())
    if tv.acyclic:
        integral, cert = seifert_integrality_certificate(index, rep)
        out["certificate"] = {"integral": integral, "agrees": cert.agrees, "fiber_factors": [str(f) for f in cert.fiber_factors]}
    if args.format == "json":
        return 0, _dump(out)
    return 0, f"{out['value']}  ~ {complex(*out['float']):.12g}  acyclic={out['acyclic']}\n"


def _curve(text):
    try:
        u, w = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("curve must be U,W") from None
    return u, w


def cmd_powersum(args):
    kw = {}
    if args.curve is not None:
        if not args.kind.startswith("adj-neg"):
            raise UsageError("--curve applies only to adj-neg")
        kw["curve"] = args.curve
    r = power_sum(args.kind, args.p, args.q, args.m, **kw)
    status = 0 if r.passes and all(r.checks.values()) else 1
    if args.format == "json":
        return status, _dump(r.to_json())
    return status, (
        f"{r.kind} p={r.p} q={r.q} m={r.m}: closed {r.closed_form}, brute {r.brute_force}, "
        f"scale {r.integrality_scale}, passes={r.passes}\n"
    )


def cmd_oracle(args):
    knot, comps = _components(args)
    if args.trials < 1:
        raise UsageError("trials must be at least 1")
    reports = [
        compare_component(knot, c, trials=args.trials, seed=args.seed, tol=args.tol, index=i) for i, c in comps
    ]
    status = 0 if all(r.passed for r in reports) else 1
    if args.format == "json":
        return status, _dump([r.to_json() for r in reports])
    lines = [f"{r.index:4d}  max rel err {r.max_rel_error:.3e}  {'pass' if r.passed else 'FAIL'}" for r in reports]
    return status, "\n".join(lines) + "\n"


def cmd_verify(args, stream=sys.stdout):
    names = SUITES if args.suite == "all" else (args.suite,)
    kw = {"seed": args.seed} if args.suite in ("oracle", "seifert") else {}
    results = [run_suite(name, **kw) for name in names]
    status = 0 if all(r.passed for r in results) else 1
    if args.format == "json":
        return status, _dump([r.to_json(include_passing=not args.failures_only) for r in results])
    text = "\n".join(r.table(include_passing=not args.failures_only) for r in results) + "\n"
    if _color_enabled(stream):
        text = text.replace("PASS", "\x1b[32mPASS\x1b[0m").replace("FAIL", "\x1b[31mFAIL\x1b[0m")
    return status, text


def _knot_args(sp, component=True):
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    if component:
        sp.add_argument("--component", type=int, metavar="INDEX")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="json")
    common.add_argument("--output", metavar="PATH")

    ap = argparse.ArgumentParser(prog="torustap", description="Twisted Alexander polynomials and torsions of torus knots.")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("components", parents=[common], help="list character-variety components")
    _knot_args(sp, component=False)
    sp.add_argument("--dim", type=int)
    sp.set_defaults(func=cmd_components)

    sp = sub.add_parser("tap", parents=[common], help="twisted Alexander polynomial per component")
    _knot_args(sp)
    sp.set_defaults(func=cmd_tap)

    sp = sub.add_parser("torsion", parents=[common], help="torsion per component")
    _knot_args(sp)
    sp.add_argument("--all", action="store_true", help="all components (default)")
    sp.add_argument("--adjoint", action="store_true")
    sp.set_defaults(func=cmd_torsion)

    sp = sub.add_parser("seifert", parents=[common], help="torsion of a Seifert fibered space")
    sp.add_argument("--index", required=True, help='"v,g;(a1,b1),(a2,b2)"')
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--omega", type=int, required=True, help="omega = zeta_n^OMEGA")
    sp.add_argument("--eigs", required=True, metavar="FILE.json")
    sp.set_defaults(func=cmd_seifert)

    sp = sub.add_parser("powersum", parents=[common], help="power sums of torsions")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--kind", choices=("sl2-neg", "sl2-pos", "adj-neg", "adj-pos"), required=True)
    sp.add_argument("--curve", type=_curve, metavar="U,W")
    sp.set_defaults(func=cmd_powersum)

    sp = sub.add_parser("oracle", parents=[common], help="numerical cross-check of the closed form")
    _knot_args(sp)
    sp.add_argument("--trials", type=int, default=20)
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.add_argument("--tol", type=float, default=1e-9)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("verify", parents=[common], help="run a verification suite")
    sp.add_argument("--suite", choices=("all",) + SUITES, default="examples")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--failures-only", action="store_true")
    sp.set_defaults(func=cmd_verify)
    return ap


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        status, text = args.func(args)
    except (UsageError, InvalidIndexError, ValueError, OSError, KeyError) as exc:
        print(f"torustap {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
