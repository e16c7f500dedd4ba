"""Translation of a formula into an equivalent alternating tree automaton.

One automaton state per AST node, named ``n<node-id>_<shorthand>``. A
bound-variable occurrence steps back to its binder's state, which is what
lets a play unfold a fixed point more than once.
"""

from __future__ import annotations

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
from .formula import (
    FIXPOINT_MU,
    FIXPOINT_NU,
    And,
    AnalysisTable,
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
    well_name,
)


def shorthand(f: Formula) -> str:
    if isinstance(f, Top):
        return "true"
    if isinstance(f, Bottom):
        return "false"
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, NegAtom):
        return "not_" + f.name
    if isinstance(f, And):
        return "and"
    if isinstance(f, Or):
        return "or"
    if isinstance(f, Box):
        return "box"
    if isinstance(f, Diamond):
        return "dia"
    if isinstance(f, Mu):
        return "mu_" + f.var
    if isinstance(f, Nu):
        return "nu_" + f.var
    raise TypeError(f"not a formula: {f!r}")


def priority_for(fixpoint: str, depth: int) -> int:
    """Odd priorities for mu-binders, even for nu-binders, scaled by alternation depth."""
    if fixpoint == FIXPOINT_MU and depth > 0:
        return 2 * ((depth + 1) // 2) - 1
    if fixpoint == FIXPOINT_NU and depth > 0:
        return 2 * (depth // 2)
    return 0


def _bound_binders(table: AnalysisTable) -> dict[int, int]:
    """Map each bound-variable occurrence to the node-id of its binder."""
    bound = {}

    def walk(i: int, scope: dict[str, int]):
        node = table.nodes[i]
        if isinstance(node, (Mu, Nu)):
            scope = {**scope, node.var: i}
        elif isinstance(node, Atom) and node.name in scope:
            bound[i] = scope[node.name]
        for c in table.children(i):
            walk(c, scope)

    walk(0, {})
    return bound


def compile_formula(f: Formula) -> Automaton:
    """Build the automaton ``A(f)``; ``f`` is well-named first if necessary."""
    f = well_name(f)
    table = analyse(f)
    names = [f"n{i}_{shorthand(node)}" for i, node in enumerate(table.nodes)]
    bound = _bound_binders(table)

    delta, priority = {}, {}
    for i, node in enumerate(table.nodes):
        q = names[i]
        kids = [names[c] for c in table.children(i)]
        if isinstance(node, Bottom):
            cond = Const0()
        elif isinstance(node, Top):
            cond = Const1()
        elif isinstance(node, Atom):
            cond = State(names[bound[i]]) if i in bound else Prop(node.name)
        elif isinstance(node, NegAtom):
            if i in bound or node.name in table.binder:
                raise ValueError(f"bound variable {node.name!r} occurs negated")
            cond = NegProp(node.name)
        elif isinstance(node, And):
            cond = AndStates(*kids)
        elif isinstance(node, Or):
            cond = OrStates(*kids)
        elif isinstance(node, Box):
            cond = BoxState(kids[0])
        elif isinstance(node, Diamond):
            cond = DiamondState(kids[0])
        else:
            cond = State(kids[0])
        delta[q] = cond
        priority[q] = priority_for(table.fixpoint[i], table.depth[i])

    return Automaton(tuple(names), names[0], delta, priority)
