"""Command-line front end.

Every subcommand prints one canonical result to stdout (text, or JSON with
--json).  Verification subcommands end with a PASS or FAIL line and exit
nonzero on failure.  Input errors go to stderr with exit code 2.

The environment variable SHUFFLE_MAX_DEGREE (default 6) caps the degree of
any requested computation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import serialize
from .shapes import parse_shape

EPILOG = """\
formats:
  path         N/E string from (0,0), or +/- string (+ = E, - = N)
  partition    comma separated, e.g. 2,1
  composition  comma separated, e.g. 3,1
  expression   symmetric function, e.g. "s[2,1] + (q+1)*h[1]^2"

examples:
  compshuffle chi --path NNEENE
  compshuffle chi --path NNEENE --weight zero
  compshuffle zeta --path NENNNENNEEEENNEE
  compshuffle dalpha --alpha 1,2 --method brute
  compshuffle verify shuffle --n 4 --jobs 2
"""


class UsageError(Exception):
    pass


def max_degree() -> int:
    raw = os.environ.get("SHUFFLE_MAX_DEGREE", "6")
    try:
        return int(raw)
    except ValueError as exc:
        raise UsageError(f"SHUFFLE_MAX_DEGREE must be an integer, got {raw!r}") from exc


def guard(degree: int):
    cap = max_degree()
    if degree > cap:
        raise UsageError(f"degree {degree} exceeds SHUFFLE_MAX_DEGREE={cap}")


def _shape(text: str, kind: str) -> tuple:
    try:
        shape = parse_shape(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if kind == "partition" and any(a < b for a, b in zip(shape, shape[1:])):
        raise UsageError(f"{text!r} is not a partition")
    if any(p <= 0 for p in shape):
        raise UsageError(f"{text!r} has a nonpositive part")
    return shape


def _path(text: str, start: int = 0):
    from .dyck import PathError, parse_path

    try:
        return parse_path(text, start)
    except (PathError, ValueError) as exc:
        raise UsageError(str(exc)) from exc


def _expr(text: str):
    try:
        return serialize.parse_symfunc(text)
    except (ValueError, KeyError) as exc:
        raise UsageError(str(exc)) from exc


def _emit(args, value, text=None):
    if args.json:
        print(serialize.dumps(value, args.basis))
    else:
        print(text if text is not None else serialize.serialize(value, "pretty", args.basis))


# -- subcommands ----------------------------------------------------------------


def cmd_chi(args):
    from .charfn import chi, chi_partial, chi_weighted, chi_zero
    from .symfn.macdonald import macdonald_path

    weight = args.weight or "one"
    if weight.startswith("mu="):
        mu = _shape(weight[3:], "partition")
        guard(sum(mu))
        mu_path, wt = macdonald_path(mu)
        p = _path(args.path) if args.path else mu_path
        if p.steps != mu_path.steps:
            raise UsageError(f"weight mu={weight[3:]} lives on the path {mu_path.steps}")
        value = chi_weighted(p, wt)
    else:
        if not args.path:
            raise UsageError("--path is required")
        p = _path(args.path, args.start)
        guard(len(p.area_seq))
        if p.start:
            if weight != "one":
                raise UsageError("weights apply to full paths only")
            value = chi_partial(p)
        elif weight == "one":
            value = chi(p)
        elif weight == "zero":
            value = chi_zero(p)
        else:
            raise UsageError(f"unknown weight {weight!r}")
    _emit(args, value)


def cmd_zeta(args):
    from .dyck import bounce, bounce_seq, touch_prime, touch_prime_data, zeta

    p = _path(args.path)
    z = zeta(p)
    pp = z.pi_prime
    l, ts = touch_prime_data(pp)
    data = {
        "path": p.steps,
        "pi_prime": pp.steps,
        "sigma": list(z.sigma),
        "bounce_seq": list(bounce_seq(pp)),
        "bounce": bounce(pp),
        "area_prime": pp.area,
        "t": list(ts),
        "touch_prime": list(touch_prime(pp)),
        "corners": sorted(map(list, pp.corners)),
    }
    _print_dict(args, data)


def cmd_stats(args):
    from .dyck import enumerate_paths

    if args.path:
        _print_dict(args, _path(args.path).statistics())
        return
    if args.n is None:
        raise UsageError("give --path or --n")
    guard(args.n)
    rows = [p.statistics() for p in enumerate_paths(args.n)]
    if args.json:
        print(json.dumps(rows, sort_keys=True))
    else:
        for r in rows:
            print(f"{r['path']}  area={r['area']} dinv={r['dinv']} touch={','.join(map(str, r['touch']))}")


def cmd_macdonald(args):
    from .symfn.macdonald import macdonald_H

    mu = _shape(args.mu, "partition")
    guard(sum(mu))
    _emit(args, macdonald_H(mu))


def cmd_nabla(args):
    from .symfn.macdonald import nabla

    F = _expr(args.expr)
    guard(max(F.degrees(), default=0))
    _emit(args, nabla(F))


def cmd_nalpha(args):
    from .shuffle import n_alpha

    alpha = _shape(args.alpha, "composition")
    guard(sum(alpha))
    _emit(args, n_alpha(alpha))


def cmd_dalpha(args):
    from .shuffle import d_alpha_brute, d_alpha_operator, nabla_c

    alpha = _shape(args.alpha, "composition")
    guard(sum(alpha))
    fn = {"op": d_alpha_operator, "brute": d_alpha_brute, "nabla": nabla_c}[args.method]
    _emit(args, fn(alpha))


def cmd_ninv(args):
    from .dpa.velem import VElem
    from .shuffle import n_involution

    F = _expr(args.expr)
    exps = tuple(int(x) for x in args.y.split(",")) if args.y else ()
    if any(e < 0 for e in exps):
        raise UsageError("y exponents must be nonnegative")
    guard(max(F.degrees(), default=0) + sum(exps))
    _emit(args, n_involution(VElem.monomial(exps, F)))


def cmd_verify(args):
    if args.target == "shuffle":
        ok, payload, lines = _verify_shuffle(args)
    elif args.target == "relations":
        ok, payload, lines = _verify_relations(args)
    elif args.target == "bijection":
        from .dyck import verify_bijection

        n = 8 if args.n is None else args.n
        rep = verify_bijection(n)
        ok, payload, lines = rep["status"] == "pass", rep, [f"checked {rep['checked']} paths of size <= {n}"]
    else:
        from .charfn import verify_charfn

        n = 5 if args.n is None else args.n
        guard(n)
        rep = verify_charfn(n)
        ok, payload, lines = rep["status"] == "pass", rep, [f"checked {rep['checked']} paths of size <= {n}"]
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in lines:
            print(line)
        for f in payload.get("failures", []):
            print(f"  failure: {f}")
        print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def _verify_shuffle(args):
    from .shuffle import verify_shuffle

    n = 3 if args.n is None else args.n
    if n < 0:
        raise UsageError("--n must be nonnegative")
    guard(n)
    rep = verify_shuffle(n, jobs=args.jobs)
    payload = {
        "n": rep.n,
        "ordering": rep.ordering,
        "status": rep.status,
        "sum_check": rep.sum_check,
        "failures": [list(r.alpha) for r in rep.records if not r.ok],
        "records": [
            {
                "alpha": list(r.alpha),
                "D_op": serialize.to_json(r.d_op, args.basis),
                "D_brute": serialize.to_json(r.d_brute, args.basis),
                "nabla_C": serialize.to_json(r.nabla_c, args.basis),
                "op_equals_brute": r.op_equals_brute,
                "op_equals_nabla": r.op_equals_nabla,
            }
            for r in rep.records
        ],
    }
    lines = [f"ordering: {rep.ordering}"]
    for r in rep.records:
        lines.append(f"{','.join(map(str, r.alpha)) or '()'}: {'ok' if r.ok else 'MISMATCH'}  D = {r.d_op.to(args.basis)}")
    lines.append(f"sum of D_alpha = (-1)^n nabla e_n: {'ok' if rep.sum_check else 'MISMATCH'}")
    return rep.status == "pass", payload, lines


def _verify_relations(args):
    from .dpa.relations import check_relations, summarize

    degree = 3 if args.degree is None else args.degree
    guard(degree)
    results = check_relations(args.k_max, degree, args.trials, args.seed, exhaustive=args.exhaustive, jobs=args.jobs)
    summary = summarize(results)
    payload = {
        "summary": summary,
        "results": [
            {"relation": r.relation, "level": r.level, "degree": r.degree, "status": r.status, "checked": r.checked}
            for r in results
        ],
    }
    lines = [f"{r.status:7s} V_{r.level} deg {r.degree} {r.mode:10s} {r.relation}" for r in results if r.status != "pass"]
    lines.append(f"{summary['relations']} relations, {summary['checks']} checks, {len(summary['failed'])} failed")
    return summary["status"] == "pass", payload, lines


def _print_dict(args, data: dict):
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        for k, v in data.items():
            print(f"{k}: {v}")


# -- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--basis", default="s", choices=["m", "e", "h", "p", "s"], help="output basis (default s)")

    parser = argparse.ArgumentParser(
        prog="compshuffle",
        description="Exact computations around the compositional shuffle theorem.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chi", parents=[common], help="characteristic function of a path")
    p.add_argument("--path", help="Dyck path (partial if --start > 0)")
    p.add_argument("--start", type=int, default=0, help="starting height k of a partial path")
    p.add_argument("--weight", help="zero | one | mu=<partition> (corner weights of H_mu)")
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("zeta", parents=[common], help="zeta map, sigma, bounce data and touch'")
    p.add_argument("--path", required=True)
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("stats", parents=[common], help="area, dinv, touch and corners")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--path")
    g.add_argument("--n", type=int, help="dump all paths of size n")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("macdonald", parents=[common], help="modified Macdonald polynomial H_mu")
    p.add_argument("--mu", required=True)
    p.set_defaults(func=cmd_macdonald)

    p = sub.add_parser("nabla", parents=[common], help="apply nabla to an expression")
    p.add_argument("--expr", required=True)
    p.set_defaults(func=cmd_nabla)

    p = sub.add_parser("nalpha", parents=[common], help="N_alpha in V_l(alpha)")
    p.add_argument("--alpha", required=True)
    p.set_defaults(func=cmd_nalpha)

    p = sub.add_parser("dalpha", parents=[common], help="D_alpha by one of three routes")
    p.add_argument("--alpha", required=True)
    p.add_argument("--method", choices=["op", "brute", "nabla"], default="op")
    p.set_defaults(func=cmd_dalpha)

    p = sub.add_parser("ninv", parents=[common], help="the involution N on y^e * F")
    p.add_argument("--expr", required=True, help="symmetric function F")
    p.add_argument("--y", help="y exponents, e.g. 1,0 (level = number of entries)")
    p.set_defaults(func=cmd_ninv)

    p = sub.add_parser("verify", parents=[common], help="verification suites")
    p.add_argument("target", choices=["shuffle", "relations", "bijection", "charfn"])
    p.add_argument("--n", type=int, help="size bound (shuffle: degree; bijection/charfn: max path size)")
    p.add_argument("--k-max", type=int, default=3, help="relations: highest level")
    p.add_argument("--degree", type=int, help="relations: degree bound")
    p.add_argument("--trials", type=int, default=20, help="relations: random elements per relation and level")
    p.add_argument("--exhaustive", action="store_true", help="relations: whole monomial basis per degree")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rc = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return rc or 0


if __name__ == "__main__":
    sys.exit(main())
