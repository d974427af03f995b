"""Command-line entry point: ``python -m qaffine <subcommand> ...``.

Check results are printed one per line with a ``PASS``/``FAIL`` prefix; exit
status is 0 when everything passed, 1 on any failure and 2 on usage errors.
``--json`` switches any subcommand to a single JSON document on stdout.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import acceptance, cluster, rmatrix, sl2eval, tsys
from .paths import enumerate_paths, q_character
from .snakes import parse_snake


class UsageError(Exception):
    pass


def _emit(args, lines: list[str], payload: dict) -> None:
    if args.json:
        print(json.dumps(payload, indent=1, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _status(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


def _parse_point(text: str) -> tuple[int, int]:
    try:
        i, k = text.split(":")
        return int(i), int(k)
    except ValueError:
        raise UsageError(f"bad point {text!r}; expected i:k")


# -- subcommands ---------------------------------------------------------------

def cmd_qchar(args) -> int:
    s = parse_snake(args.snake, args.rank)
    ch = q_character(s)
    _emit(args, [str(ch)], {"snake": [list(p) for p in s.points], "character": ch.to_json()})
    return 0


def cmd_paths(args) -> int:
    i, k = _parse_point(args.point)
    lines, rows = [], []
    for p in enumerate_paths(i, k, args.rank):
        up = sorted(p.upper_corners())
        low = sorted(p.lower_corners())
        mono = p.monomial()
        lines.append(f"{p}  upper={[tuple(c) for c in up]} lower={[tuple(c) for c in low]}  {mono}")
        rows.append({"heights": list(p.heights), "upper": [list(c) for c in up],
                     "lower": [list(c) for c in low], "monomial": mono.to_json()})
    _emit(args, lines, {"point": [i, k], "rank": args.rank, "paths": rows})
    return 0


def cmd_sl2(args) -> int:
    m = sl2eval.EvalModule(args.r, args.s)
    m.check_parity()
    dp = sl2eval.drinfeld_polynomial(m)
    weights = [sl2eval.loop_weight(m, k) for k in range(m.r + 1)]
    ch = sl2eval.q_character_closed(m)
    lines = [f"module {m}", f"dimension {m.dim}", f"drinfeld polynomial {dp}"]
    lines += [f"loop-weight v_{k}: {w}" for k, w in enumerate(weights)]
    lines.append(f"q-character {ch}")
    _emit(args, lines, {"r": m.r, "s": m.s, "dimension": m.dim, "drinfeld_polynomial": dp.to_json(),
                        "loop_weights": [w.to_json() for w in weights], "character": ch.to_json()})
    return 0


# expanding both sides costs roughly this many monomial products before printing is skipped
_EXPAND_LIMIT = 200_000


def _expansion_cost(groups) -> int:
    total = 0
    for g in groups:
        cost = 1
        for f in g:
            cost *= max(len(f), 1)
        total += cost
    return total


def _report_identity(args, label: str, rep: tsys.IdentityReport) -> int:
    ok = rep.ok
    payload = {"check": label, "pass": ok,
               "factor_sizes": {"lhs": [[len(f) for f in g] for g in rep.lhs_groups],
                                "rhs": [[len(f) for f in g] for g in rep.rhs_groups]}}
    cost = _expansion_cost(rep.lhs_groups) + _expansion_cost(rep.rhs_groups)
    if args.full or cost <= _EXPAND_LIMIT:
        lhs, rhs = rep.lhs, rep.rhs
        lines = [f"LHS {lhs}", f"RHS {rhs}"]
        payload["lhs"], payload["rhs"] = lhs.to_json(), rhs.to_json()
    else:
        sizes = payload["factor_sizes"]
        lines = [f"LHS sum of products of characters with term counts {sizes['lhs']} (--full expands)",
                 f"RHS sum of products of characters with term counts {sizes['rhs']} (--full expands)"]
    lines.append(f"{_status(ok)} {label}")
    _emit(args, lines, payload)
    return 0 if ok else 1


def cmd_tsys(args) -> int:
    rep = tsys.t_system_sides(args.i, args.k, args.r, args.rank)
    return _report_identity(args, f"T-system i={args.i} k={args.k} r={args.r} rank={args.rank}", rep)


def cmd_ext_tsys(args) -> int:
    s = parse_snake(args.snake, args.rank)
    rep = tsys.extended_t_system_sides(s)
    return _report_identity(args, f"extended T-system snake={s} rank={args.rank}", rep)


def cmd_cluster_run(args) -> int:
    need = math.ceil((args.rank + 1) / 2)
    if args.rounds < need:
        raise UsageError(f"--rounds must be >= {need} for rank {args.rank}")
    rep = cluster.verify_kr_correspondence(args.rank, args.depth, args.rounds, args.check_depth)
    if args.dump_seed:
        rep.seed.dump(args.dump_seed)
    lines = rep.lines()
    lines.append(f"{_status(rep.ok)} KR correspondence rank={args.rank} depth={args.depth} "
                 f"rounds={args.rounds} stable={len(rep.stable)}/{len(rep.vertices)}")
    payload = {
        "rank": rep.rank, "depth": rep.depth, "rounds": rep.rounds, "check_depth": rep.check_depth,
        "pass": rep.ok, "quiver_restored": rep.quiver_restored,
        "vertices": [{"i": c.vertex.i, "r": c.vertex.k, "k": c.k, "status": c.status}
                     for c in rep.vertices],
    }
    _emit(args, lines, payload)
    return 0 if rep.ok else 1


def cmd_ybe(args) -> int:
    ok = rmatrix.check_ybe(args.rank, args.mode, args.samples)
    lines = []
    payload = {"rank": args.rank, "mode": args.mode, "pass": ok}
    if args.dump:
        R = rmatrix.fundamental_r(args.rank)
        lines += R.text_lines()
        payload["entries"] = R.text_lines()
    note = " (sampled evidence)" if args.mode == "sampled" else ""
    lines.append(f"{_status(ok)} Yang-Baxter rank={args.rank} mode={args.mode}{note}")
    _emit(args, lines, payload)
    return 0 if ok else 1


def cmd_selftest(args) -> int:
    results = acceptance.run_all(args.only)
    _emit(args, [r.line() for r in results],
          {"criteria": [{"number": r.number, "title": r.title, "pass": r.passed,
                         "detail": r.detail, "seconds": round(r.seconds, 3)} for r in results]})
    return 0 if all(r.passed for r in results) else 1


# -- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print one JSON document")

    parser = argparse.ArgumentParser(prog="qaffine", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("qchar", parents=[common], help="q-character of a snake module")
    p.add_argument("--snake", required=True, help='points "i:k,i:k,..."')
    p.add_argument("--rank", type=int, required=True)
    p.set_defaults(func=cmd_qchar)

    p = sub.add_parser("paths", parents=[common], help="list the paths of a lattice point")
    p.add_argument("action", choices=["dump"])
    p.add_argument("point", help="i:k")
    p.add_argument("--rank", type=int, required=True)
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("sl2", parents=[common], help="evaluation module data")
    p.add_argument("action", choices=["info"])
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.set_defaults(func=cmd_sl2)

    p = sub.add_parser("tsys", parents=[common], help="check one T-system relation")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--full", action="store_true", help="always print both sides in full")
    p.set_defaults(func=cmd_tsys)

    p = sub.add_parser("ext-tsys", parents=[common], help="check an extended T-system relation")
    p.add_argument("--snake", required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--full", action="store_true", help="always print both sides in full")
    p.set_defaults(func=cmd_ext_tsys)

    p = sub.add_parser("cluster-run", parents=[common], help="mutate G^- and compare with KR characters")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--depth", type=int, default=10)
    p.add_argument("--rounds", type=int, required=True)
    p.add_argument("--check-depth", type=int, default=None,
                   help="depth of the comparison run (default: twice --depth)")
    p.add_argument("--dump-seed", metavar="FILE", default=None)
    p.set_defaults(func=cmd_cluster_run)

    p = sub.add_parser("ybe-check", parents=[common], help="Yang-Baxter equation for the R-matrix")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--mode", choices=["exact", "sampled"], default="exact")
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--dump", action="store_true", help="print the matrix entries")
    p.set_defaults(func=cmd_ybe)

    p = sub.add_parser("selftest", parents=[common], help="run the acceptance criteria")
    p.add_argument("--only", type=int, nargs="*", choices=sorted(acceptance.CRITERIA), default=None)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
