"""Direct fixed-point evaluation of formulas over a Kripke structure.

This is the reference semantics the automaton/game pipeline is checked
against, so it deliberately shares nothing with that pipeline beyond the
formula and structure types.
"""

from __future__ import annotations

from typing import Callable, Mapping

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
)
from .kripke import KripkeStructure, PointedSystem

StateSet = frozenset
Valuation = Mapping[str, frozenset]


class NonMonotoneError(RuntimeError):
    """A fixed-point chain failed to be monotone or to stabilise in time."""


def lfp_iterate(
    step: Callable[[frozenset], frozenset], states: frozenset
) -> tuple[frozenset, int]:
    """Least fixed point of a monotone ``step`` by iteration from the empty set.

    Returns ``(fixpoint, changes)`` where ``changes`` counts the strict
    increases along the chain; it never exceeds ``len(states)``.
    """
    current: frozenset = frozenset()
    changes = 0
    while True:
        nxt = frozenset(step(current))
        if nxt == current:
            return current, changes
        if not current <= nxt or changes >= len(states):
            raise NonMonotoneError("ascending chain is not monotone")
        current = nxt
        changes += 1


def gfp_iterate(
    step: Callable[[frozenset], frozenset], states: frozenset
) -> tuple[frozenset, int]:
    """Greatest fixed point by iteration downwards from ``states``."""
    current = frozenset(states)
    changes = 0
    while True:
        nxt = frozenset(step(current))
        if nxt == current:
            return current, changes
        if not nxt <= current or changes >= len(states):
            raise NonMonotoneError("descending chain is not monotone")
        current = nxt
        changes += 1


class Evaluator:
    """Evaluates formulas on one structure, recording fixed-point chain lengths.

    ``chains`` collects, for every fixed-point computation performed
    (including the inner ones recomputed on each outer round), the number of
    strict steps its chain took.
    """

    def __init__(self, k: KripkeStructure, valuation: Valuation | None = None):
        self.k = k
        self.all = frozenset(k.states)
        self.valuation = dict(valuation or {})
        for name, states in self.valuation.items():
            if not frozenset(states) <= self.all:
                raise ValueError(f"valuation of {name!r} mentions unknown states")
        self.chains: list[int] = []

    def eval(self, f: Formula, env: Mapping[str, frozenset] | None = None) -> frozenset:
        env = self.valuation if env is None else env
        return self._eval(f, env)

    def _lookup(self, name: str, env) -> frozenset:
        if name in env:
            return frozenset(env[name])
        # unlabelled propositions denote the empty set
        return self.k.holds(name)

    def _eval(self, f: Formula, env) -> frozenset:
        k = self.k
        if isinstance(f, Top):
            return self.all
        if isinstance(f, Bottom):
            return frozenset()
        if isinstance(f, Atom):
            return self._lookup(f.name, env)
        if isinstance(f, NegAtom):
            return self.all - self._lookup(f.name, env)
        if isinstance(f, And):
            return self._eval(f.left, env) & self._eval(f.right, env)
        if isinstance(f, Or):
            return self._eval(f.left, env) | self._eval(f.right, env)
        if isinstance(f, Diamond):
            inner = self._eval(f.body, env)
            return frozenset(s for s in k.states if any(t in inner for t in k.successors(s)))
        if isinstance(f, Box):
            inner = self._eval(f.body, env)
            return frozenset(s for s in k.states if all(t in inner for t in k.successors(s)))
        if isinstance(f, (Mu, Nu)):
            def step(x, f=f):
                return self._eval(f.body, {**env, f.var: x})

            iterate = lfp_iterate if isinstance(f, Mu) else gfp_iterate
            result, changes = iterate(step, self.all)
            self.chains.append(changes)
            return result
        raise TypeError(f"not a formula: {f!r}")


def eval_formula(f: Formula, k: KripkeStructure, v: Valuation | None = None) -> frozenset:
    """The set of states of ``k`` satisfying ``f`` under valuation ``v``."""
    return Evaluator(k, v).eval(f)


def models(p: PointedSystem, f: Formula) -> bool:
    return p.initial in eval_formula(f, p.structure)
