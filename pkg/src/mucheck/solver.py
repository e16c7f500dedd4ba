"""Solving max-parity games: winning regions with positional witness strategies.

:func:`solve` is Zielonka's recursive attractor decomposition.
:func:`brute_force_solve` enumerates positional strategies and is only meant
as a test oracle for small games. :func:`verify_strategy` checks a claimed
witness independently of both.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .game import GameError, ParityGame

BRUTE_FORCE_LIMIT = 12


@dataclass(frozen=True)
class Strategy:
    """Positional strategy of ``player``: a move for each of their vertices it covers."""

    player: int
    moves: Mapping = field(default_factory=dict)

    __hash__ = None

    def restrict(self, vertices: Iterable) -> "Strategy":
        keep = set(vertices)
        return Strategy(self.player, {v: w for v, w in self.moves.items() if v in keep})


@dataclass(frozen=True)
class WinningRegions:
    region0: frozenset
    region1: frozenset
    strategy0: Strategy
    strategy1: Strategy

    __hash__ = None

    def region(self, player: int) -> frozenset:
        return self.region0 if player == 0 else self.region1

    def strategy(self, player: int) -> Strategy:
        return self.strategy0 if player == 0 else self.strategy1

    def winner(self, v) -> int:
        return 0 if v in self.region0 else 1


# ---------------------------------------------------------------------------
# Zielonka


class _Zielonka:
    # Dead ends become self-loops whose priority parity favours the opponent.

    def __init__(self, g: ParityGame):
        self.g = g
        self.owner = g.owner
        self.pos = {v: i for i, v in enumerate(g.vertices)}
        self.succ = {}
        self.prio = dict(g.priority)
        for v in g.vertices:
            if g.is_dead_end(v):
                self.succ[v] = (v,)
                self.prio[v] = 1 - g.owner[v]
            else:
                self.succ[v] = g.successors(v)
        pred = {v: [] for v in g.vertices}
        for v in g.vertices:
            for w in self.succ[v]:
                pred[w].append(v)
        self.pred = pred

    def attractor(self, player: int, target: set, sub: frozenset) -> tuple[set, dict]:
        """Vertices of ``sub`` from which ``player`` can force a visit to ``target``."""
        layer = {v: 0 for v in target}
        remaining = {
            v: sum(1 for w in self.succ[v] if w in sub)
            for v in sub
            if self.owner[v] != player
        }
        queue = deque(sorted(target, key=self.pos.__getitem__))
        while queue:
            w = queue.popleft()
            for v in self.pred[w]:
                if v not in sub or v in layer:
                    continue
                if self.owner[v] == player:
                    layer[v] = layer[w] + 1
                    queue.append(v)
                else:
                    remaining[v] -= 1
                    if remaining[v] == 0:
                        layer[v] = layer[w] + 1
                        queue.append(v)
        moves = {}
        for v, lv in layer.items():
            if lv > 0 and self.owner[v] == player:
                moves[v] = next(w for w in self.succ[v] if w in sub and layer.get(w, lv) < lv)
        return set(layer), moves

    def solve(self, sub: frozenset) -> tuple[list[set], list[dict]]:
        if not sub:
            return [set(), set()], [{}, {}]
        d = max(self.prio[v] for v in sub)
        me = d % 2
        other = 1 - me
        top = {v for v in sub if self.prio[v] == d}
        attr, attr_moves = self.attractor(me, top, sub)
        regions, strategies = self.solve(sub - attr)
        if not regions[other]:
            mine = dict(strategies[me])
            mine.update(attr_moves)
            for v in top:
                if self.owner[v] == me:
                    mine[v] = next(w for w in self.succ[v] if w in sub)
            win = [set(), set()]
            win[me] = set(sub)
            strat = [{}, {}]
            strat[me] = mine
            return win, strat
        lost, lost_moves = self.attractor(other, regions[other], sub)
        regions2, strategies2 = self.solve(sub - lost)
        win = [None, None]
        strat = [None, None]
        win[me] = regions2[me]
        strat[me] = strategies2[me]
        win[other] = regions2[other] | lost
        theirs = dict(strategies2[other])
        theirs.update({v: w for v, w in strategies[other].items() if v in regions[other]})
        theirs.update(lost_moves)
        strat[other] = theirs
        return win, strat


def solve(g: ParityGame) -> WinningRegions:
    """Winning regions and positional winning strategies of a max-parity game."""
    z = _Zielonka(g)
    regions, strategies = z.solve(frozenset(g.vertices))
    out = []
    for player in (0, 1):
        moves = {
            v: w
            for v, w in strategies[player].items()
            if v in regions[player] and g.owner[v] == player and not g.is_dead_end(v)
        }
        ordered = {v: moves[v] for v in g.vertices if v in moves}
        out.append(Strategy(player, ordered))
    r0, r1 = frozenset(regions[0]), frozenset(regions[1])
    assert not (r0 & r1) and len(r0) + len(r1) == len(g), "regions must partition the game"
    return WinningRegions(r0, r1, out[0], out[1])


# ---------------------------------------------------------------------------
# strategy verification


def on_cycles(nodes: Iterable, succ: Mapping) -> set:
    """Vertices of the graph induced by ``nodes`` that lie on some cycle.

    Iterative Tarjan; ``succ`` may mention vertices outside ``nodes``, which
    are ignored.
    """
    nodes = list(nodes)
    inside = set(nodes)
    index: dict = {}
    low: dict = {}
    on_stack: set = set()
    stack: list = []
    out: set = set()
    counter = 0
    for root in nodes:
        if root in index:
            continue
        work = [(root, iter(succ[root]))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            for w in it:
                if w not in inside:
                    continue
                if w == v:
                    out.add(v)
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(succ[w])))
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            else:
                work.pop()
                if work:
                    u = work[-1][0]
                    low[u] = min(low[u], low[v])
                if low[v] == index[v]:
                    comp = []
                    while True:
                        w = stack.pop()
                        on_stack.discard(w)
                        comp.append(w)
                        if w == v:
                            break
                    if len(comp) > 1:
                        out.update(comp)
    return out


def _bad_cycle_vertices(nodes: list, succ: Mapping, prio: Mapping, player: int) -> set:
    """Vertices of priority ``d`` on a cycle whose priorities are all ``<= d``, ``d`` of the wrong parity."""
    bad = set()
    for d in {prio[v] for v in nodes}:
        if d % 2 == player:
            continue
        cyclic = on_cycles([v for v in nodes if prio[v] <= d], succ)
        bad |= {v for v in cyclic if prio[v] == d}
    return bad


def verify_strategy(g: ParityGame, s: Strategy, claimed: Iterable) -> bool:
    """Check that ``s`` wins every play starting in ``claimed``.

    With the strategy's player fixed to their chosen moves and the opponent
    free: plays never leave ``claimed``, the player is never stuck, and every
    cycle has a maximal priority of the player's parity.
    """
    claimed = frozenset(claimed)
    player = s.player
    for v, w in s.moves.items():
        if v not in g.owner or w not in g.successors(v):
            raise GameError(f"strategy move {v!r} -> {w!r} is not an edge")
    succ = {}
    for v in claimed:
        if v not in g.owner:
            return False
        if g.owner[v] == player:
            if g.is_dead_end(v) or v not in s.moves:
                return False
            nxt = (s.moves[v],)
        else:
            nxt = g.successors(v)
        if any(w not in claimed for w in nxt):
            return False
        succ[v] = nxt
    return not _bad_cycle_vertices(list(claimed), succ, g.priority, player)


# ---------------------------------------------------------------------------
# brute force oracle


def _strategies(g: ParityGame, player: int):
    mine = [v for v in g.vertices if g.owner[v] == player and not g.is_dead_end(v)]
    for choice in itertools.product(*(g.successors(v) for v in mine)):
        yield dict(zip(mine, choice))


def _won_by(g: ParityGame, moves: Mapping, player: int) -> set:
    """Vertices from which every play consistent with ``moves`` is won by ``player``.

    Same criteria as :func:`verify_strategy` applied to each vertex's
    reachable set, computed in one pass: a vertex loses iff it can reach a
    vertex where ``player`` is stuck or a cycle dominated by the wrong parity.
    """
    succ = {
        v: ((moves[v],) if g.owner[v] == player and v in moves else
            () if g.owner[v] == player else g.successors(v))
        for v in g.vertices
    }
    bad = {v for v in g.vertices if g.owner[v] == player and not succ[v]}
    bad |= _bad_cycle_vertices(list(g.vertices), succ, g.priority, player)
    losing = set(bad)
    stack = list(bad)
    while stack:
        w = stack.pop()
        for v in g.predecessors(w):
            if v not in losing and w in succ[v]:
                losing.add(v)
                stack.append(v)
    return set(g.vertices) - losing


def _brute_force_player(g: ParityGame, player: int) -> tuple[frozenset, Strategy]:
    region: set = set()
    per_strategy = []
    for moves in _strategies(g, player):
        won = _won_by(g, moves, player)
        region |= won
        per_strategy.append((won, moves))
    region = frozenset(region)
    for won, moves in per_strategy:
        if won == region:
            witness = Strategy(player, moves).restrict(region)
            if not verify_strategy(g, witness, region):
                raise AssertionError("brute-force witness fails verification")
            return region, witness
    raise AssertionError("no uniform positional strategy wins the whole region")


def brute_force_solve(g: ParityGame) -> WinningRegions:
    """Winning regions by exhaustive enumeration of positional strategies (small games only)."""
    if len(g) > BRUTE_FORCE_LIMIT:
        raise GameError(f"brute force is limited to {BRUTE_FORCE_LIMIT} vertices, game has {len(g)}")
    r0, s0 = _brute_force_player(g, 0)
    r1, s1 = _brute_force_player(g, 1)
    if r0 & r1 or len(r0) + len(r1) != len(g):
        raise AssertionError("brute-force regions do not partition the game")
    return WinningRegions(r0, r1, s0, s1)


# ---------------------------------------------------------------------------
# transformations


def dual_game(g: ParityGame) -> ParityGame:
    """Swap the players: owners flip and every priority goes up by one.

    The winning regions of the dual are those of ``g`` with the players swapped.
    """
    return ParityGame(
        g.vertices,
        {v: 1 - o for v, o in g.owner.items()},
        {v: p + 1 for v, p in g.priority.items()},
        g.edges,
        g.initial,
        g.names,
    )


def to_max_parity(g: ParityGame) -> ParityGame:
    """Reinterpret a min-parity game as a max-parity one.

    Priorities are reflected through the smallest even number at or above the
    largest priority, which reverses their order and keeps every parity.
    """
    top = max(g.priority.values(), default=0)
    top += top % 2
    return g.with_priorities({v: top - p for v, p in g.priority.items()})


def solve_min_parity(g: ParityGame) -> WinningRegions:
    return solve(to_max_parity(g))
