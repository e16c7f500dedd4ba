"""Alternating tree automata over pointed transition systems.

A transition condition is one of the nine shapes below; conjunction and
disjunction range over exactly two states and modalities over one.

Text dump, one line per state plus the initial state::

    init <q>
    state <q> prio <n> delta <condition>

with ``<condition>`` one of ``0``, ``1``, ``p <name>``, ``!p <name>``,
``st <q>``, ``box <q>``, ``dia <q>``, ``and <q1> <q2>``, ``or <q1> <q2>``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import networkx as nx


class TransitionCondition:
    __slots__ = ()

    def targets(self) -> tuple[str, ...]:
        """Automaton states mentioned in the condition."""
        return ()


@dataclass(frozen=True)
class Const0(TransitionCondition):
    pass


@dataclass(frozen=True)
class Const1(TransitionCondition):
    pass


@dataclass(frozen=True)
class Prop(TransitionCondition):
    name: str


@dataclass(frozen=True)
class NegProp(TransitionCondition):
    name: str


@dataclass(frozen=True)
class State(TransitionCondition):
    q: str

    def targets(self):
        return (self.q,)


@dataclass(frozen=True)
class BoxState(TransitionCondition):
    q: str

    def targets(self):
        return (self.q,)


@dataclass(frozen=True)
class DiamondState(TransitionCondition):
    q: str

    def targets(self):
        return (self.q,)


@dataclass(frozen=True)
class AndStates(TransitionCondition):
    q1: str
    q2: str

    def targets(self):
        return (self.q1, self.q2)


@dataclass(frozen=True)
class OrStates(TransitionCondition):
    q1: str
    q2: str

    def targets(self):
        return (self.q1, self.q2)


class AutomatonError(ValueError):
    pass


@dataclass(frozen=True)
class Automaton:
    states: tuple[str, ...]
    initial: str
    delta: Mapping[str, TransitionCondition]
    priority: Mapping[str, int]

    def __post_init__(self):
        known = set(self.states)
        if len(known) != len(self.states):
            raise AutomatonError("duplicate automaton states")
        if self.initial not in known:
            raise AutomatonError(f"initial state {self.initial!r} is not a state")
        if set(self.delta) != known:
            raise AutomatonError("delta must be defined on exactly the automaton states")
        if set(self.priority) != known:
            raise AutomatonError("priority must be defined on exactly the automaton states")
        for q, cond in self.delta.items():
            for t in cond.targets():
                if t not in known:
                    raise AutomatonError(f"delta({q}) mentions unknown state {t!r}")
        for q, prio in self.priority.items():
            if not isinstance(prio, int) or prio < 0:
                raise AutomatonError(f"priority of {q!r} must be a natural number")

    __hash__ = None  # mappings inside


def transition_graph(a: Automaton) -> nx.DiGraph:
    """Edge ``q -> q'`` iff ``q'`` occurs in ``delta(q)``."""
    g = nx.DiGraph()
    g.add_nodes_from(a.states)
    for q in a.states:
        for t in a.delta[q].targets():
            g.add_edge(q, t)
    return g


def cyclic_components(g: nx.DiGraph) -> list[set]:
    """Strongly connected components that contain at least one edge."""
    out = []
    for comp in nx.strongly_connected_components(g):
        if len(comp) > 1 or any(g.has_edge(v, v) for v in comp):
            out.append(comp)
    return out


def index(a: Automaton) -> int:
    """Largest number of distinct priorities inside one cycle-bearing SCC (0 if none).

    A single state without a self-loop does not count as a component here.
    """
    g = transition_graph(a)
    return max(
        (len({a.priority[q] for q in comp}) for comp in cyclic_components(g)),
        default=0,
    )


# ---------------------------------------------------------------------------
# text dump


def condition_text(c: TransitionCondition) -> str:
    if isinstance(c, Const0):
        return "0"
    if isinstance(c, Const1):
        return "1"
    if isinstance(c, Prop):
        return f"p {c.name}"
    if isinstance(c, NegProp):
        return f"!p {c.name}"
    if isinstance(c, State):
        return f"st {c.q}"
    if isinstance(c, BoxState):
        return f"box {c.q}"
    if isinstance(c, DiamondState):
        return f"dia {c.q}"
    if isinstance(c, AndStates):
        return f"and {c.q1} {c.q2}"
    if isinstance(c, OrStates):
        return f"or {c.q1} {c.q2}"
    raise TypeError(f"not a transition condition: {c!r}")


_CONDITIONS = {
    "0": (Const0, 0),
    "1": (Const1, 0),
    "p": (Prop, 1),
    "!p": (NegProp, 1),
    "st": (State, 1),
    "box": (BoxState, 1),
    "dia": (DiamondState, 1),
    "and": (AndStates, 2),
    "or": (OrStates, 2),
}


def parse_condition(words: list[str]) -> TransitionCondition:
    if not words or words[0] not in _CONDITIONS:
        raise AutomatonError(f"unknown transition condition {' '.join(words)!r}")
    cls, arity = _CONDITIONS[words[0]]
    if len(words) - 1 != arity:
        raise AutomatonError(f"condition {words[0]!r} takes {arity} argument(s)")
    return cls(*words[1:])


def print_automaton(a: Automaton) -> str:
    lines = [f"init {a.initial}"]
    for q in a.states:
        lines.append(f"state {q} prio {a.priority[q]} delta {condition_text(a.delta[q])}")
    return "\n".join(lines) + "\n"


def parse_automaton(text: str) -> Automaton:
    states, delta, priority = [], {}, {}
    initial = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        words = raw.split("#", 1)[0].split()
        if not words:
            continue
        if words[0] == "init":
            if len(words) != 2 or initial is not None:
                raise AutomatonError(f"line {lineno}: malformed or repeated 'init'")
            initial = words[1]
        elif words[0] == "state":
            if len(words) < 6 or words[2] != "prio" or words[4] != "delta":
                raise AutomatonError(f"line {lineno}: expected 'state <q> prio <n> delta <condition>'")
            q = words[1]
            if q in delta:
                raise AutomatonError(f"line {lineno}: duplicate state {q!r}")
            try:
                prio = int(words[3])
            except ValueError:
                raise AutomatonError(f"line {lineno}: priority must be an integer") from None
            states.append(q)
            priority[q] = prio
            delta[q] = parse_condition(words[5:])
        else:
            raise AutomatonError(f"line {lineno}: unknown keyword {words[0]!r}")
    if initial is None:
        raise AutomatonError("no 'init' line")
    return Automaton(tuple(states), initial, delta, priority)
