"""Finite pointed Kripke structures and their line-oriented text format.

Text format (``#`` comments, blank lines ignored)::

    state <id> [<prop> ...]
    trans <src> <dst>
    init <id>
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping


class KripkeError(ValueError):
    pass


@dataclass(frozen=True)
class KripkeStructure:
    """States, transition relation and labelling of a finite transition system.

    States are kept sorted so every iteration over them is deterministic.
    """

    states: tuple[str, ...]
    transitions: frozenset[tuple[str, str]]
    labels: Mapping[str, frozenset[str]]
    _succ: dict = field(init=False, repr=False, compare=False)
    _pred: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        states = tuple(sorted(self.states))
        if not states:
            raise KripkeError("a Kripke structure needs at least one state")
        if len(set(states)) != len(states):
            raise KripkeError("duplicate state ids")
        known = set(states)
        transitions = frozenset(self.transitions)
        for src, dst in transitions:
            for end in (src, dst):
                if end not in known:
                    raise KripkeError(f"transition endpoint {end!r} is not a declared state")
        if set(self.labels) - known:
            raise KripkeError(f"labels for undeclared states: {sorted(set(self.labels) - known)}")
        labels = {s: frozenset(self.labels.get(s, ())) for s in states}
        succ = {s: [] for s in states}
        pred = {s: [] for s in states}
        for src, dst in sorted(transitions):
            succ[src].append(dst)
            pred[dst].append(src)
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "transitions", transitions)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_succ", {s: tuple(v) for s, v in succ.items()})
        object.__setattr__(self, "_pred", {s: tuple(v) for s, v in pred.items()})

    def __hash__(self):
        return hash((self.states, self.transitions, tuple(self.labels.items())))

    def successors(self, s: str) -> tuple[str, ...]:
        try:
            return self._succ[s]
        except KeyError:
            raise KripkeError(f"unknown state {s!r}") from None

    def predecessors(self, s: str) -> tuple[str, ...]:
        try:
            return self._pred[s]
        except KeyError:
            raise KripkeError(f"unknown state {s!r}") from None

    def props(self) -> frozenset[str]:
        out: frozenset[str] = frozenset()
        for v in self.labels.values():
            out |= v
        return out

    def holds(self, prop: str) -> frozenset[str]:
        """States whose label contains ``prop``."""
        return frozenset(s for s in self.states if prop in self.labels[s])


@dataclass(frozen=True)
class PointedSystem:
    structure: KripkeStructure
    initial: str

    def __post_init__(self):
        if self.initial not in self.structure.labels:
            raise KripkeError(f"initial state {self.initial!r} is not a declared state")


def successors(k: KripkeStructure, s: str) -> frozenset[str]:
    return frozenset(k.successors(s))


def predecessors(k: KripkeStructure, s: str) -> frozenset[str]:
    return frozenset(k.predecessors(s))


def make_pointed(
    labels: Mapping[str, Iterable[str]],
    transitions: Iterable[tuple[str, str]],
    initial: str,
) -> PointedSystem:
    """Convenience constructor; the states are the keys of ``labels``."""
    k = KripkeStructure(
        states=tuple(labels),
        transitions=frozenset(transitions),
        labels={s: frozenset(props) for s, props in labels.items()},
    )
    return PointedSystem(k, initial)


def parse_kripke(text: str) -> PointedSystem:
    labels: dict[str, frozenset[str]] = {}
    transitions = []
    initial = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        words = raw.split("#", 1)[0].split()
        if not words:
            continue
        keyword, args = words[0], words[1:]
        if keyword == "state":
            if not args:
                raise KripkeError(f"line {lineno}: 'state' needs an id")
            if args[0] in labels:
                raise KripkeError(f"line {lineno}: duplicate state {args[0]!r}")
            labels[args[0]] = frozenset(args[1:])
        elif keyword == "trans":
            if len(args) != 2:
                raise KripkeError(f"line {lineno}: 'trans' needs exactly two state ids")
            transitions.append((args[0], args[1]))
        elif keyword == "init":
            if len(args) != 1:
                raise KripkeError(f"line {lineno}: 'init' needs exactly one state id")
            if initial is not None:
                raise KripkeError(f"line {lineno}: second 'init' line")
            initial = args[0]
        else:
            raise KripkeError(f"line {lineno}: unknown keyword {keyword!r}")
    for src, dst in transitions:
        for end in (src, dst):
            if end not in labels:
                raise KripkeError(f"transition {src} -> {dst}: undeclared state {end!r}")
    if initial is None:
        raise KripkeError("no 'init' line")
    if initial not in labels:
        raise KripkeError(f"initial state {initial!r} is not declared")
    return make_pointed(labels, transitions, initial)


def print_kripke(p: PointedSystem) -> str:
    k = p.structure
    lines = []
    for s in k.states:
        lines.append(" ".join(["state", s, *sorted(k.labels[s])]))
    for src, dst in sorted(k.transitions):
        lines.append(f"trans {src} {dst}")
    lines.append(f"init {p.initial}")
    return "\n".join(lines) + "\n"
