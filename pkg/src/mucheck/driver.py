"""Model checking two ways, and bounded satisfiability search."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .compile import compile_formula
from .formula import Formula, free_vars, well_name
from .game import build_acceptance_game
from .kripke import PointedSystem, make_pointed
from .semantics import Evaluator
from .solver import Strategy, solve

SEMANTIC = "semantic"
GAME = "game"


@dataclass(frozen=True)
class CheckReport:
    verdict: bool
    method: str
    game_vertices: int | None = None
    game_edges: int | None = None
    iterations: tuple[int, ...] = ()
    witness: Strategy | None = field(default=None, compare=False)


def check_semantic(p: PointedSystem, f: Formula) -> CheckReport:
    """Decide ``p |= f`` by evaluating fixed points directly."""
    ev = Evaluator(p.structure)
    verdict = p.initial in ev.eval(well_name(f))
    return CheckReport(verdict, SEMANTIC, iterations=tuple(ev.chains))


def check_game(p: PointedSystem, f: Formula) -> CheckReport:
    """Decide ``p |= f`` by solving the acceptance game of the compiled automaton."""
    g = build_acceptance_game(compile_formula(f), p)
    regions = solve(g)
    verdict = g.initial in regions.region0
    return CheckReport(
        verdict,
        GAME,
        game_vertices=len(g),
        game_edges=len(g.edges),
        witness=regions.strategy0 if verdict else None,
    )


def _canonical_relations(n: int):
    """Transition relations on states 0..n-1 in which every state is reachable
    from 0 and breadth-first search from 0 visits the states in index order.

    Every finite pointed structure is bisimilar to its reachable part, and the
    reachable part can be renumbered this way, so no model is lost.
    """
    subsets = [tuple(c) for r in range(n + 1) for c in itertools.combinations(range(n), r)]
    for rows in itertools.product(subsets, repeat=n):
        order, seen = [0], {0}
        i = 0
        while i < len(order):
            for t in rows[order[i]]:
                if t not in seen:
                    seen.add(t)
                    order.append(t)
            i += 1
        if order == list(range(n)):
            yield rows


def sat_bounded(f: Formula, max_states: int) -> PointedSystem | None:
    """First model of ``f`` with at most ``max_states`` states, or ``None``.

    ``None`` only means no model exists within the bound; it is not a proof
    of unsatisfiability. The search cost grows like ``2**(n*n)`` in the bound.
    """
    if max_states < 1:
        raise ValueError("the state bound must be at least 1")
    f = well_name(f)
    props = sorted(free_vars(f))
    label_choices = [
        frozenset(c) for r in range(len(props) + 1) for c in itertools.combinations(props, r)
    ]
    for n in range(1, max_states + 1):
        names = [f"s{i}" for i in range(n)]
        for rows in _canonical_relations(n):
            transitions = [(names[i], names[j]) for i, row in enumerate(rows) for j in row]
            for labelling in itertools.product(label_choices, repeat=n):
                p = make_pointed(dict(zip(names, labelling)), transitions, names[0])
                if check_semantic(p, f).verdict:
                    return p
    return None
