"""Command-line interface.

Exit codes: 0 success, 1 a ``verify-*`` property fails, 2 bad input or usage.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import analysis, serialize
from .game import CardinalityPowerGame, random_supermodular_game, random_table_game
from .hypergraph import (
    Semantics,
    critical_players,
    exists_path,
    is_bridge,
    players_of,
    strong_components,
)
from .values import myerson, myerson_monte_carlo, shapley_exact


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--input", "-i", default="-", help="instance file (default: stdin)")
    p.add_argument("--semantics", choices=["strong", "weak"], default=None,
                   help="override the instance's connectivity semantics")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
    fmt.add_argument("--table", dest="fmt", action="store_const", const="table")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fmt="json")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="dhmyerson", description="Myerson values for directed hypergraph games"
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("components", parents=[common], help="component partition")
    sub.add_parser("bridges", parents=[common], help="classify every edge as bridge or not")
    p = sub.add_parser("critical", parents=[common], help="players on every path s -> t")
    p.add_argument("--from", dest="source", type=int, required=True)
    p.add_argument("--to", dest="target", type=int, required=True)
    sub.add_parser("myerson", parents=[common], help="exact Myerson value")
    sub.add_parser("shapley", parents=[common], help="exact Shapley value of the base game")
    for name in ("stability", "safety"):
        p = sub.add_parser(name, parents=[common], help=f"{name} of one edge")
        p.add_argument("--edge", required=True, help="edge label (e2) or 1-based position (2)")
    sub.add_parser("decomposition", parents=[common],
                   help="check v^E(S) = sum over components T of v^E(S & T)")
    sub.add_parser("verify-axioms", parents=[common],
                   help="component efficiency and fairness of the Myerson value")
    sub.add_parser("verify-theorem", parents=[common],
                   help="bridge <=> safe for a convex game, edge by edge")
    p = sub.add_parser("audit", parents=[common], help="check reported Myerson vectors")
    p.add_argument("--reported", required=True, help="JSON file with a 'reported' list")
    p = sub.add_parser("estimate", parents=[common], help="Monte Carlo Myerson value")
    p.add_argument("--samples", type=int, required=True)
    p = sub.add_parser("generate", parents=[common], help="random instance to stdout")
    p.add_argument("--players", type=int, default=5)
    p.add_argument("--edges", type=int, default=4)
    p.add_argument("--tail-max", type=int, default=2)
    p.add_argument("--head-max", type=int, default=2)
    p.add_argument("--game", choices=["random_supermodular", "table", "cardinality_power"],
                   default="random_supermodular")
    p.add_argument("--terms", type=int, default=3)
    p.add_argument("--eps", default="0", help="strictness term for random_supermodular")
    return parser


def _read_instance(args):
    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    h, g, sem = serialize.parse_instance(text)
    if args.semantics:
        sem = Semantics(args.semantics)
    return h, g, sem


def _edge_index(h, spec: str) -> int:
    labels = [e.label for e in h.edges]
    if spec in labels:
        return labels.index(spec)
    try:
        k = int(spec)
    except ValueError:
        raise ValueError(f"unknown edge {spec!r}") from None
    if not 1 <= k <= len(labels):
        raise ValueError(f"edge position {k} outside 1..{len(labels)}")
    return k - 1


def _emit(args, obj, table_text=None) -> None:
    if args.fmt == "table":
        sys.stdout.write(table_text if table_text is not None else serialize.render_table(obj))
    else:
        sys.stdout.write(serialize.emit_report(obj))


def _run(args) -> int:
    cmd = args.command
    if cmd == "generate":
        h = analysis.random_hypergraph(args.players, args.edges, args.tail_max, args.head_max, args.seed)
        if args.game == "random_supermodular":
            g = random_supermodular_game(args.players, args.terms, args.seed, Fraction(args.eps))
        elif args.game == "table":
            g = random_table_game(args.players, args.seed)
        else:
            g = CardinalityPowerGame(args.players, 2)
        sys.stdout.write(serialize.emit_instance(h, g, Semantics(args.semantics or "strong")))
        return 0

    h, g, sem = _read_instance(args)
    if cmd == "components":
        part = strong_components(h, sem)
        lines = "".join(" ".join(map(str, b)) + "\n" for b in part.as_lists())
        _emit(args, {"semantics": sem.value, "components": part.as_lists()}, lines)
    elif cmd == "bridges":
        rows = [{"edge": e.label, "bridge": is_bridge(h, k, sem)} for k, e in enumerate(h.edges)]
        text = "".join(f"{r['edge']}  {'bridge' if r['bridge'] else '-'}\n" for r in rows)
        _emit(args, {"semantics": sem.value, "bridges": rows}, text)
    elif cmd == "critical":
        h.check_player(args.source)
        h.check_player(args.target)
        crit = critical_players(h, args.source, args.target)
        out = {"from": args.source, "to": args.target,
               "path_exists": exists_path(h, args.source, args.target),
               "critical": None if crit is None else players_of(crit)}
        text = "no path\n" if crit is None else " ".join(map(str, players_of(crit))) + "\n"
        _emit(args, out, text)
    elif cmd == "myerson":
        _emit(args, myerson(h, g, sem))
    elif cmd == "shapley":
        _emit(args, shapley_exact(g))
    elif cmd in ("stability", "safety"):
        check = analysis.check_stability if cmd == "stability" else analysis.check_safety
        _emit(args, check(h, g, sem, _edge_index(h, args.edge)))
    elif cmd == "decomposition":
        _emit(args, analysis.check_decomposition(h, g, sem))
    elif cmd == "verify-axioms":
        reports = analysis.verify_axioms(h, g, sem)
        _emit(args, {"reports": reports}, serialize.render_table(reports))
        return 0 if all(r.holds for r in reports) else 1
    elif cmd == "verify-theorem":
        report = analysis.verify_bridge_safety_theorem(h, g, sem)
        _emit(args, report)
        return 0 if report.holds else 1
    elif cmd == "audit":
        with open(args.reported, encoding="utf-8") as fh:
            reported = json.load(fh)["reported"]
        _emit(args, analysis.audit_reported_values(h, g, sem, reported))
    elif cmd == "estimate":
        _emit(args, myerson_monte_carlo(h, g, sem, args.samples, args.seed))
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except (ValueError, IndexError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
