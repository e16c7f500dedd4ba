"""Parity games: arenas, plays, winning conditions and the acceptance game.

Acceptance games use the max-parity condition: Player 0 wins an infinite
play iff the largest priority seen infinitely often is even. A player who
cannot move loses.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Mapping

from .automaton import (
    AndStates,
    Automaton,
    BoxState,
    Const0,
    Const1,
    DiamondState,
    NegProp,
    OrStates,
    Prop,
    State,
)
from .kripke import PointedSystem

Vertex = Hashable


class GameError(ValueError):
    pass


@dataclass(frozen=True)
class ParityGame:
    """A finite arena with priorities.

    ``vertices`` fixes the canonical order used for tie-breaking and output.
    Successor tuples follow that order too. Dead ends (no successors) are
    allowed.
    """

    vertices: tuple
    owner: Mapping[Vertex, int]
    priority: Mapping[Vertex, int]
    edges: frozenset
    initial: Vertex | None = None
    names: Mapping[Vertex, str] = field(default_factory=dict)
    _succ: dict = field(init=False, repr=False, compare=False)
    _pred: dict = field(init=False, repr=False, compare=False)
    _pos: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        vertices = tuple(self.vertices)
        pos = {v: i for i, v in enumerate(vertices)}
        if len(pos) != len(vertices):
            raise GameError("duplicate vertices")
        for v in vertices:
            if self.owner.get(v) not in (0, 1):
                raise GameError(f"vertex {v!r} needs owner 0 or 1")
            p = self.priority.get(v)
            if not isinstance(p, int) or p < 0:
                raise GameError(f"vertex {v!r} needs a natural-number priority")
        edges = frozenset(self.edges)
        succ = {v: [] for v in vertices}
        pred = {v: [] for v in vertices}
        for u, w in edges:
            if u not in pos or w not in pos:
                raise GameError(f"edge {u!r} -> {w!r} leaves the vertex set")
            succ[u].append(w)
            pred[w].append(u)
        if self.initial is not None and self.initial not in pos:
            raise GameError(f"initial vertex {self.initial!r} is not a vertex")
        key = pos.__getitem__
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "owner", {v: self.owner[v] for v in vertices})
        object.__setattr__(self, "priority", {v: self.priority[v] for v in vertices})
        object.__setattr__(self, "names", dict(self.names))
        object.__setattr__(self, "_succ", {v: tuple(sorted(s, key=key)) for v, s in succ.items()})
        object.__setattr__(self, "_pred", {v: tuple(sorted(s, key=key)) for v, s in pred.items()})
        object.__setattr__(self, "_pos", pos)

    __hash__ = None

    def __len__(self):
        return len(self.vertices)

    def successors(self, v) -> tuple:
        return self._succ[v]

    def predecessors(self, v) -> tuple:
        return self._pred[v]

    def position(self, v) -> int:
        return self._pos[v]

    def is_dead_end(self, v) -> bool:
        return not self._succ[v]

    def player_vertices(self, player: int) -> list:
        return [v for v in self.vertices if self.owner[v] == player]

    def name(self, v) -> str:
        return self.names.get(v, str(v))

    def with_priorities(self, priority: Mapping) -> "ParityGame":
        return ParityGame(self.vertices, self.owner, priority, self.edges, self.initial, self.names)

    def with_owners(self, owner: Mapping) -> "ParityGame":
        return ParityGame(self.vertices, owner, self.priority, self.edges, self.initial, self.names)


# ---------------------------------------------------------------------------
# plays and winning conditions

MAX_PARITY = "max-parity"
MIN_PARITY = "min-parity"


@dataclass(frozen=True)
class Muller:
    """Player 0 wins iff the set of priorities seen infinitely often is in ``family``."""

    family: frozenset

    def __init__(self, family: Iterable[Iterable[int]]):
        object.__setattr__(self, "family", frozenset(frozenset(s) for s in family))


@dataclass(frozen=True)
class UltimatelyPeriodicPlay:
    """``prefix`` followed by ``cycle`` repeated forever; an empty cycle is a finite play."""

    prefix: tuple = ()
    cycle: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(self.prefix))
        object.__setattr__(self, "cycle", tuple(self.cycle))
        if not self.prefix and not self.cycle:
            raise GameError("a play needs at least one vertex")

    @property
    def finite(self) -> bool:
        return not self.cycle


def _check_play(g: ParityGame, play: UltimatelyPeriodicPlay):
    seq = list(play.prefix) + list(play.cycle)
    if play.cycle:
        seq.append(play.cycle[0])
    for v in seq:
        if v not in g._pos:
            raise GameError(f"play visits unknown vertex {v!r}")
    for u, w in zip(seq, seq[1:]):
        if w not in g._succ[u]:
            raise GameError(f"play step {u!r} -> {w!r} is not an edge")
    if play.finite and not g.is_dead_end(play.prefix[-1]):
        raise GameError("a finite play must end in a dead end")


def infinity_set(g: ParityGame, play: UltimatelyPeriodicPlay) -> frozenset:
    """Priorities occurring infinitely often along the play."""
    return frozenset(g.priority[v] for v in play.cycle)


def evaluate_play(g: ParityGame, play: UltimatelyPeriodicPlay, condition=MAX_PARITY) -> int:
    """Winner (0 or 1) of ``play`` under ``condition``.

    ``condition`` is :data:`MAX_PARITY`, :data:`MIN_PARITY` or a
    :class:`Muller` family. A finite play is lost by the owner of its last
    vertex, whatever the condition.
    """
    _check_play(g, play)
    if play.finite:
        return 1 - g.owner[play.prefix[-1]]
    inf = infinity_set(g, play)
    if condition == MAX_PARITY:
        return max(inf) % 2
    if condition == MIN_PARITY:
        return min(inf) % 2
    if isinstance(condition, Muller):
        return 0 if inf in condition.family else 1
    raise GameError(f"unknown winning condition {condition!r}")


# ---------------------------------------------------------------------------
# acceptance game


def _vertex_moves(a: Automaton, p: PointedSystem, q: str, s: str) -> tuple[int, list]:
    k = p.structure
    cond = a.delta[q]
    if isinstance(cond, Const0):
        return 0, []
    if isinstance(cond, Const1):
        return 1, []
    if isinstance(cond, Prop):
        return (1 if cond.name in k.labels[s] else 0), []
    if isinstance(cond, NegProp):
        return (0 if cond.name in k.labels[s] else 1), []
    if isinstance(cond, State):
        return 0, [(cond.q, s)]
    if isinstance(cond, OrStates):
        return 0, list(dict.fromkeys([(cond.q1, s), (cond.q2, s)]))
    if isinstance(cond, AndStates):
        return 1, list(dict.fromkeys([(cond.q1, s), (cond.q2, s)]))
    if isinstance(cond, DiamondState):
        return 0, [(cond.q, t) for t in k.successors(s)]
    if isinstance(cond, BoxState):
        return 1, [(cond.q, t) for t in k.successors(s)]
    raise TypeError(f"not a transition condition: {cond!r}")


def build_acceptance_game(a: Automaton, p: PointedSystem) -> ParityGame:
    """The parity game deciding whether ``a`` accepts ``p``.

    Vertices are the pairs ``(q, s)`` reachable from ``(q_I, s_I)``, listed
    in breadth-first discovery order; each takes the priority of its
    automaton state. Literals and constants become dead ends owned by the
    player for whom they are false, so that player is stuck and loses.
    """
    start = (a.initial, p.initial)
    order = [start]
    owner, priority, edges = {}, {}, set()
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        q, s = v
        owner[v], succ = _vertex_moves(a, p, q, s)
        priority[v] = a.priority[q]
        for w in succ:
            edges.add((v, w))
            if w not in seen:
                seen.add(w)
                order.append(w)
                queue.append(w)
    names = {v: f"{v[0]}@{v[1]}" for v in order}
    return ParityGame(tuple(order), owner, priority, frozenset(edges), start, names)


# ---------------------------------------------------------------------------
# output formats


def export_dot(g: ParityGame) -> str:
    """Graphviz description: Player 0 vertices as ellipses, Player 1 as boxes."""
    lines = ["digraph game {"]
    for i, v in enumerate(g.vertices):
        shape = "ellipse" if g.owner[v] == 0 else "box"
        label = f"{g.name(v)}\\n{g.priority[v]}".replace('"', '\\"')
        extra = ", penwidth=2" if v == g.initial else ""
        lines.append(f'  v{i} [shape={shape}, label="{label}"{extra}];')
    for v in g.vertices:
        for w in g.successors(v):
            lines.append(f"  v{g.position(v)} -> v{g.position(w)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _pg_ids(g: ParityGame) -> dict:
    if all(isinstance(v, int) and not isinstance(v, bool) and v >= 0 for v in g.vertices):
        return {v: v for v in g.vertices}
    return {v: i for i, v in enumerate(g.vertices)}


def print_pgsolver(g: ParityGame) -> str:
    """PGSolver text. Non-integer vertices are numbered by position and named."""
    ids = _pg_ids(g)
    top = max(ids.values(), default=-1)
    lines = [f"parity {top};"]
    if g.initial is not None:
        lines.append(f"start {ids[g.initial]};")
    for v in g.vertices:
        parts = [str(ids[v]), str(g.priority[v]), str(g.owner[v])]
        succ = ",".join(str(ids[w]) for w in g.successors(v))
        if succ:
            parts.append(succ)
        name = g.names.get(v)
        if name is None and ids[v] != v:
            name = str(v)
        if name is not None:
            parts.append('"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"')
        lines.append(" ".join(parts) + ";")
    return "\n".join(lines) + "\n"


def _split_statements(text: str) -> list[tuple[int, str]]:
    """Split on ';' outside string literals, keeping the line number of each statement."""
    out, buf = [], []
    line, start_line = 1, 1
    in_str = escaped = False
    for ch in text:
        if in_str:
            buf.append(ch)
            if escaped:
                escaped = False
            elif ch == "\\":
                escaped = True
            elif ch == '"':
                in_str = False
        elif ch == ";":
            out.append((start_line, "".join(buf).strip()))
            buf = []
        else:
            if not buf and not ch.isspace():
                start_line = line
            if buf or not ch.isspace():
                buf.append(ch)
            in_str = ch == '"'
        if ch == "\n":
            line += 1
    if in_str:
        raise GameError("unterminated string literal")
    if "".join(buf).strip():
        raise GameError(f"line {start_line}: statement is missing its ';'")
    return out


def _parse_int(word: str, what: str, line: int) -> int:
    try:
        n = int(word)
    except ValueError:
        raise GameError(f"line {line}: {what} must be an integer, got {word!r}") from None
    if n < 0:
        raise GameError(f"line {line}: {what} must be non-negative")
    return n


def _unquote(s: str) -> str:
    out, i = [], 1
    while i < len(s) - 1:
        if s[i] == "\\" and i + 1 < len(s) - 1:
            i += 1
        out.append(s[i])
        i += 1
    return "".join(out)


def parse_pgsolver(text: str) -> ParityGame:
    """Read a game in PGSolver format (``parity <max-id>;`` header, optional ``start <id>;``)."""
    statements = [(ln, st) for ln, st in _split_statements(text) if st]
    if not statements:
        raise GameError("empty input: expected 'parity <max-id>;'")
    line, header = statements[0]
    words = header.split()
    if len(words) != 2 or words[0] != "parity":
        raise GameError(f"line {line}: malformed header {header!r}")
    max_id = _parse_int(words[1], "maximal vertex id", line)
    initial = None
    owner, priority, names = {}, {}, {}
    succ: dict[int, list[int]] = {}
    for line, st in statements[1:]:
        name = None
        if st.endswith('"'):
            q = st.find('"')
            name = _unquote(st[q:])
            st = st[:q].strip()
        words = st.split()
        if words and words[0] == "start":
            if len(words) != 2 or initial is not None or name is not None:
                raise GameError(f"line {line}: malformed 'start'")
            initial = _parse_int(words[1], "start vertex", line)
            continue
        if len(words) not in (3, 4):
            raise GameError(f"line {line}: expected '<id> <priority> <owner> <successors>'")
        v = _parse_int(words[0], "vertex id", line)
        if v > max_id:
            raise GameError(f"line {line}: vertex {v} exceeds declared maximum {max_id}")
        if v in owner:
            raise GameError(f"line {line}: duplicate vertex {v}")
        priority[v] = _parse_int(words[1], "priority", line)
        who = _parse_int(words[2], "owner", line)
        if who not in (0, 1):
            raise GameError(f"line {line}: owner must be 0 or 1, got {who}")
        owner[v] = who
        succ[v] = [_parse_int(w, "successor", line) for w in words[3].split(",") if w] if len(words) == 4 else []
        if name is not None:
            names[v] = name
    vertices = tuple(sorted(owner))
    edges = set()
    for v, ws in succ.items():
        for w in ws:
            if w not in owner:
                raise GameError(f"vertex {v} has undeclared successor {w}")
            edges.add((v, w))
    if initial is not None and initial not in owner:
        raise GameError(f"start vertex {initial} is not declared")
    return ParityGame(vertices, owner, priority, frozenset(edges), initial, names)
