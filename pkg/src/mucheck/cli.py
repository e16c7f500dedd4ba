"""Command-line interface.

Exit status: 0 for a true verdict or success, 1 for a false verdict or no
model found, 2 for usage or input errors. The verdict goes to stdout as a
single line; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import sys

from .automaton import AutomatonError, print_automaton
from .compile import compile_formula
from .driver import check_game, check_semantic, sat_bounded
from .formula import FormulaSyntaxError, analyse, parse_formula, well_name
from .game import GameError, build_acceptance_game, export_dot, parse_pgsolver, print_pgsolver
from .kripke import KripkeError, parse_kripke, print_kripke
from .solver import solve

EXIT_TRUE, EXIT_FALSE, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _formula(arg: str):
    text = _read(arg[1:]) if arg.startswith("@") else arg
    return parse_formula(text)


def _verdict(value: bool) -> int:
    print("true" if value else "false")
    return EXIT_TRUE if value else EXIT_FALSE


def cmd_check(args) -> int:
    p = parse_kripke(_read(args.kripke))
    f = _formula(args.formula)
    if args.method == "semantic":
        return _verdict(check_semantic(p, f).verdict)
    if args.method == "game":
        return _verdict(check_game(p, f).verdict)
    sem, gam = check_semantic(p, f), check_game(p, f)
    if sem.verdict != gam.verdict:
        print(
            f"error: methods disagree (semantic={sem.verdict}, game={gam.verdict})",
            file=sys.stderr,
        )
        return EXIT_ERROR
    return _verdict(sem.verdict)


def cmd_compile(args) -> int:
    text = print_automaton(compile_formula(_formula(args.formula)))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_TRUE


def cmd_game(args) -> int:
    p = parse_kripke(_read(args.kripke))
    g = build_acceptance_game(compile_formula(_formula(args.formula)), p)
    sys.stdout.write(export_dot(g) if args.dot else print_pgsolver(g))
    return EXIT_TRUE


def cmd_solve(args) -> int:
    g = parse_pgsolver(_read(args.game))
    if not g.vertices:
        raise UsageError("game has no vertices")
    start = g.initial if g.initial is not None else g.vertices[0]
    regions = solve(g)
    status = _verdict(start in regions.region0)
    if args.witness:
        for player in (0, 1):
            region = sorted(regions.region(player), key=g.position)
            print(" ".join([f"region{player}", *map(str, region)]))
        for player in (0, 1):
            for v, w in regions.strategy(player).moves.items():
                print(f"strategy{player} {v} {w}")
    return status


def cmd_sat(args) -> int:
    model = sat_bounded(_formula(args.formula), args.bound)
    if model is None:
        print("false")
        print(f"no model up to bound {args.bound}", file=sys.stderr)
        return EXIT_FALSE
    print("true")
    sys.stdout.write(print_kripke(model))
    return EXIT_TRUE


def cmd_alternation(args) -> int:
    print(analyse(well_name(_formula(args.formula))).depth[0])
    return EXIT_TRUE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mucheck",
        description="Modal mu-calculus model checking via fixed points and parity games.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="model-check a formula on a Kripke structure")
    p.add_argument("kripke")
    p.add_argument("formula", help="formula text, or @file")
    p.add_argument("--method", choices=["semantic", "game", "both"], default="both")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("compile", help="print the alternating tree automaton of a formula")
    p.add_argument("formula")
    p.add_argument("--out")
    p.set_defaults(func=cmd_compile)

    p = sub.add_parser("game", help="print the acceptance game of a formula on a structure")
    p.add_argument("kripke")
    p.add_argument("formula")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true", help="Graphviz output")
    fmt.add_argument("--pg", action="store_true", help="PGSolver output (default)")
    p.set_defaults(func=cmd_game)

    p = sub.add_parser("solve", help="solve a PGSolver game; verdict for its start vertex")
    p.add_argument("game")
    p.add_argument("--witness", action="store_true", help="also print regions and strategies")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("sat", help="search for a model with a bounded number of states")
    p.add_argument("formula")
    p.add_argument("--bound", type=int, required=True)
    p.set_defaults(func=cmd_sat)

    p = sub.add_parser("alternation", help="print the alternation depth of a formula")
    p.add_argument("formula")
    p.set_defaults(func=cmd_alternation)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_TRUE
    try:
        return args.func(args)
    except (UsageError, FormulaSyntaxError, KripkeError, GameError, AutomatonError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
