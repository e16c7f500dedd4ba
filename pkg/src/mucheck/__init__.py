"""Modal mu-calculus model checking by fixed-point evaluation and by parity games."""

from .automaton import Automaton, index, parse_automaton, print_automaton, transition_graph
from .compile import compile_formula
from .driver import CheckReport, check_game, check_semantic, sat_bounded
from .formula import (
    Formula,
    alternation_depth,
    analyse,
    free_vars,
    parse_formula,
    subformulas,
    to_text,
    well_name,
)
from .game import (
    ParityGame,
    UltimatelyPeriodicPlay,
    build_acceptance_game,
    evaluate_play,
    export_dot,
    parse_pgsolver,
    print_pgsolver,
)
from .kripke import KripkeStructure, PointedSystem, parse_kripke, print_kripke
from .semantics import eval_formula, models
from .solver import Strategy, WinningRegions, brute_force_solve, solve, verify_strategy

__version__ = "0.1.0"
