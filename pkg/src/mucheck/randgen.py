"""Seeded random instances for property suites and the cross-validation harness."""

from __future__ import annotations

import random

from .formula import (
    And,
    Atom,
    Bottom,
    Box,
    Diamond,
    Formula,
    Mu,
    NegAtom,
    Nu,
    Or,
    Top,
    analyse,
    size,
)
from .game import ParityGame
from .kripke import PointedSystem, make_pointed

PROPS = ("p", "q")
VARS = ("X", "Y", "Z", "W", "V")


def random_kripke(
    rng: random.Random,
    max_states: int = 6,
    props=PROPS,
    density: tuple[float, float] = (0.3, 0.7),
) -> PointedSystem:
    n = rng.randint(1, max_states)
    names = [f"s{i}" for i in range(n)]
    edge_p = rng.uniform(*density)
    transitions = [(a, b) for a in names for b in names if rng.random() < edge_p]
    labels = {s: {p for p in props if rng.random() < 0.5} for s in names}
    return make_pointed(labels, transitions, rng.choice(names))


def random_formula(
    rng: random.Random,
    max_nodes: int = 12,
    props=PROPS,
    binder_prob: float = 0.3,
) -> Formula:
    """A random well-named closed-up-to-propositions formula with at most ``max_nodes`` nodes."""
    fresh = iter(VARS + tuple(f"X{i}" for i in range(100)))

    def gen(budget: int, scope: list[str]) -> Formula:
        if budget <= 1:
            return leaf(scope)
        r = rng.random()
        if r < binder_prob:
            var = next(fresh)
            cls = Mu if rng.random() < 0.5 else Nu
            return cls(var, gen(budget - 1, scope + [var]))
        if r < binder_prob + 0.35 and budget >= 3:
            left_budget = rng.randint(1, budget - 2)
            cls = And if rng.random() < 0.5 else Or
            left = gen(left_budget, scope)
            right = gen(budget - 1 - size(left), scope)
            return cls(left, right)
        if r < binder_prob + 0.7:
            cls = Box if rng.random() < 0.5 else Diamond
            return cls(gen(budget - 1, scope))
        return leaf(scope)

    def leaf(scope: list[str]) -> Formula:
        r = rng.random()
        if scope and r < 0.45:
            return Atom(rng.choice(scope))
        if r < 0.65:
            return Atom(rng.choice(props))
        if r < 0.8:
            return NegAtom(rng.choice(props))
        return Top() if r < 0.9 else Bottom()

    return gen(rng.randint(1, max_nodes), [])


def random_formula_with_depth(
    rng: random.Random,
    depths,
    max_nodes: int = 12,
    binder_prob: float = 0.3,
) -> Formula:
    """Rejection-sample a formula whose alternation depth lies in ``depths``."""
    depths = set(depths)
    while True:
        f = random_formula(rng, max_nodes=max_nodes, binder_prob=binder_prob)
        if analyse(f).depth[0] in depths:
            return f


def random_game(
    rng: random.Random,
    max_vertices: int = 8,
    max_priority: int = 4,
    density: tuple[float, float] = (0.15, 0.6),
    dead_ends: bool = True,
) -> ParityGame:
    n = rng.randint(1, max_vertices)
    vs = list(range(n))
    edge_p = rng.uniform(*density)
    edges = {(a, b) for a in vs for b in vs if rng.random() < edge_p}
    if not dead_ends:
        for a in vs:
            if not any(e[0] == a for e in edges):
                edges.add((a, rng.choice(vs)))
    owner = {v: rng.randint(0, 1) for v in vs}
    priority = {v: rng.randint(0, max_priority) for v in vs}
    return ParityGame(tuple(vs), owner, priority, frozenset(edges), rng.choice(vs))
