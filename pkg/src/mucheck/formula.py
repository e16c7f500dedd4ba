"""Modal mu-calculus formulas in positive normal form.

Grammar accepted by :func:`parse_formula` (ASCII, whitespace-insensitive,
``#`` starts a comment running to the end of the line)::

    formula := "true" | "false" | IDENT | "!" IDENT
             | formula "&" formula | formula "|" formula
             | "<>" formula | "[]" formula
             | ("mu" | "nu") IDENT "." formula | "(" formula ")"

Unary operators bind tightest, then ``&``, then ``|``; binary operators
associate to the left. The body of a ``mu``/``nu`` binder extends as far
to the right as possible.

Fixed-point variables and atomic propositions share one namespace: an
identifier occurrence bound by an enclosing binder is a variable, an unbound
one is a proposition.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator


class Formula:
    """Base class of all formula nodes. Nodes are immutable and compare structurally."""

    __slots__ = ()

    def children(self) -> tuple["Formula", ...]:
        return ()

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True)
class Bottom(Formula):
    pass


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Atom(Formula):
    name: str


@dataclass(frozen=True)
class NegAtom(Formula):
    name: str


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True)
class Box(Formula):
    body: Formula

    def children(self):
        return (self.body,)


@dataclass(frozen=True)
class Diamond(Formula):
    body: Formula

    def children(self):
        return (self.body,)


@dataclass(frozen=True)
class Mu(Formula):
    var: str
    body: Formula

    def children(self):
        return (self.body,)


@dataclass(frozen=True)
class Nu(Formula):
    var: str
    body: Formula

    def children(self):
        return (self.body,)


Binder = (Mu, Nu)


class FormulaSyntaxError(ValueError):
    """Raised for malformed formula text; carries 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} at line {line}, column {column}")
        self.line = line
        self.column = column


# ---------------------------------------------------------------------------
# parsing

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+|\#[^\n]*)
  | (?P<diamond><>)
  | (?P<box>\[\])
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[!&|().])
    """,
    re.VERBOSE,
)

_KEYWORDS = {"true", "false", "mu", "nu"}


@dataclass(frozen=True)
class _Token:
    kind: str  # ident, keyword, op, eof
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    line, line_start = 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        column = pos - line_start + 1
        if m is None:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", line, column)
        kind = m.lastgroup
        lexeme = m.group()
        if kind == "ident":
            tokens.append(_Token("keyword" if lexeme in _KEYWORDS else "ident", lexeme, line, column))
        elif kind in ("diamond", "box", "op"):
            tokens.append(_Token("op", lexeme, line, column))
        newlines = lexeme.count("\n")
        if newlines:
            line += newlines
            line_start = m.start() + lexeme.rindex("\n") + 1
        pos = m.end()
    tokens.append(_Token("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, message: str, tok: _Token | None = None):
        tok = tok or self.peek()
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise FormulaSyntaxError(f"{message}, found {found}", tok.line, tok.column)

    def expect(self, kind: str, text: str | None = None) -> _Token:
        tok = self.peek()
        if tok.kind != kind or (text is not None and tok.text != text):
            self.error(f"expected {text or kind}")
        return self.advance()

    def parse(self) -> Formula:
        f = self.disjunction()
        if self.peek().kind != "eof":
            self.error("unexpected token")
        return f

    def disjunction(self) -> Formula:
        f = self.conjunction()
        while self.peek().text == "|" and self.peek().kind == "op":
            self.advance()
            f = Or(f, self.conjunction())
        return f

    def conjunction(self) -> Formula:
        f = self.unary()
        while self.peek().text == "&" and self.peek().kind == "op":
            self.advance()
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        tok = self.peek()
        if tok.kind == "op" and tok.text == "!":
            self.advance()
            operand = self.peek()
            if operand.kind != "ident":
                raise FormulaSyntaxError(
                    "negation applied to a non-atom", operand.line, operand.column
                )
            self.advance()
            return NegAtom(operand.text)
        if tok.kind == "op" and tok.text == "<>":
            self.advance()
            return Diamond(self.unary())
        if tok.kind == "op" and tok.text == "[]":
            self.advance()
            return Box(self.unary())
        if tok.kind == "keyword" and tok.text in ("mu", "nu"):
            self.advance()
            var = self.expect("ident")
            self.expect("op", ".")
            body = self.disjunction()
            if var.text in negated_free(body):
                raise FormulaSyntaxError(
                    f"variable {var.text!r} occurs negated in the body of its binder",
                    var.line,
                    var.column,
                )
            return (Mu if tok.text == "mu" else Nu)(var.text, body)
        return self.primary()

    def primary(self) -> Formula:
        tok = self.peek()
        if tok.kind == "keyword" and tok.text == "true":
            self.advance()
            return Top()
        if tok.kind == "keyword" and tok.text == "false":
            self.advance()
            return Bottom()
        if tok.kind == "ident":
            self.advance()
            return Atom(tok.text)
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            f = self.disjunction()
            self.expect("op", ")")
            return f
        self.error("expected a formula")


def parse_formula(text: str) -> Formula:
    """Parse ``text`` into a formula AST.

    Raises :class:`FormulaSyntaxError` on malformed input, on negation of
    anything but an identifier, and when a binder's variable occurs negated
    in its body.
    """
    return _Parser(text).parse()


def negated_free(f: Formula) -> set[str]:
    """Names occurring free under a negation in ``f``."""
    if isinstance(f, NegAtom):
        return {f.name}
    if isinstance(f, Binder):
        return negated_free(f.body) - {f.var}
    out: set[str] = set()
    for c in f.children():
        out |= negated_free(c)
    return out


# ---------------------------------------------------------------------------
# printing

_PREC_BINDER, _PREC_OR, _PREC_AND, _PREC_UNARY = range(4)


def _prec(f: Formula) -> int:
    if isinstance(f, Binder):
        return _PREC_BINDER
    if isinstance(f, Or):
        return _PREC_OR
    if isinstance(f, And):
        return _PREC_AND
    return _PREC_UNARY


def _show(f: Formula, need: int) -> str:
    s = _emit(f)
    return f"({s})" if _prec(f) < need else s


def _emit(f: Formula) -> str:
    if isinstance(f, Top):
        return "true"
    if isinstance(f, Bottom):
        return "false"
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, NegAtom):
        return "!" + f.name
    if isinstance(f, Or):
        # binders on the left would swallow the right operand
        return f"{_show(f.left, _PREC_OR)} | {_show(f.right, _PREC_AND)}"
    if isinstance(f, And):
        return f"{_show(f.left, _PREC_AND)} & {_show(f.right, _PREC_UNARY)}"
    if isinstance(f, Diamond):
        return "<>" + _show(f.body, _PREC_UNARY)
    if isinstance(f, Box):
        return "[]" + _show(f.body, _PREC_UNARY)
    if isinstance(f, Mu):
        return f"mu {f.var}. {_emit(f.body)}"
    if isinstance(f, Nu):
        return f"nu {f.var}. {_emit(f.body)}"
    raise TypeError(f"not a formula: {f!r}")


def to_text(f: Formula) -> str:
    """Render ``f`` in the concrete grammar; ``parse_formula(to_text(f)) == f``."""
    return _emit(f)


# ---------------------------------------------------------------------------
# syntactic analyses


def preorder(f: Formula) -> Iterator[Formula]:
    stack = [f]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(node.children()))


def subformulas(f: Formula) -> list[tuple[int, Formula]]:
    """Every AST node paired with its node-id (its pre-order position).

    Structurally equal subtrees at different positions are listed
    separately, so the result has exactly one entry per node.
    """
    return list(enumerate(preorder(f)))


def size(f: Formula) -> int:
    return sum(1 for _ in preorder(f))


def free_vars(f: Formula) -> frozenset[str]:
    if isinstance(f, (Atom, NegAtom)):
        return frozenset({f.name})
    if isinstance(f, Binder):
        return free_vars(f.body) - {f.var}
    out: frozenset[str] = frozenset()
    for c in f.children():
        out |= free_vars(c)
    return out


def identifiers(f: Formula) -> set[str]:
    names = set()
    for node in preorder(f):
        if isinstance(node, (Atom, NegAtom)):
            names.add(node.name)
        elif isinstance(node, Binder):
            names.add(node.var)
    return names


def is_well_named(f: Formula) -> bool:
    seen = set(free_vars(f))
    for node in preorder(f):
        if isinstance(node, Binder):
            if node.var in seen:
                return False
            seen.add(node.var)
    return True


def well_name(f: Formula) -> Formula:
    """Alpha-rename binders so each introduces a name not used elsewhere.

    A binder keeps its name unless it is already taken by a free proposition
    or an earlier binder (in pre-order); then it gets the first ``name<k>``
    (k = 1, 2, ...) that does not occur anywhere in ``f`` and has not been
    handed out yet. Already well-named formulas come back unchanged.
    """
    taken = set(free_vars(f))
    avoid = identifiers(f)

    def fresh(base: str) -> str:
        k = 1
        while f"{base}{k}" in avoid or f"{base}{k}" in taken:
            k += 1
        return f"{base}{k}"

    def go(node: Formula, env: dict[str, str]) -> Formula:
        if isinstance(node, Atom):
            return Atom(env.get(node.name, node.name))
        if isinstance(node, NegAtom):
            return NegAtom(env.get(node.name, node.name))
        if isinstance(node, Binder):
            name = node.var if node.var not in taken else fresh(node.var)
            taken.add(name)
            body = go(node.body, {**env, node.var: name})
            return type(node)(name, body)
        if isinstance(node, (And, Or)):
            left = go(node.left, env)
            return type(node)(left, go(node.right, env))
        if isinstance(node, (Box, Diamond)):
            return type(node)(go(node.body, env))
        return node

    return go(f, {})


FIXPOINT_NONE, FIXPOINT_MU, FIXPOINT_NU = "none", "mu", "nu"


@dataclass(frozen=True)
class AnalysisTable:
    """Per-node syntactic data for a well-named formula, indexed by node-id.

    ``end[i]`` is one past the last node-id in the subtree rooted at ``i``;
    ``binder[name]`` is the node-id of the binder introducing ``name``.
    """

    nodes: tuple[Formula, ...]
    free: tuple[frozenset[str], ...]
    depth: tuple[int, ...]
    fixpoint: tuple[str, ...]
    end: tuple[int, ...]
    binder: dict[str, int]

    def __len__(self):
        return len(self.nodes)

    def subtree(self, i: int) -> range:
        return range(i, self.end[i])

    def children(self, i: int) -> list[int]:
        out, j = [], i + 1
        while j < self.end[i]:
            out.append(j)
            j = self.end[j]
        return out


def analyse(f: Formula) -> AnalysisTable:
    """Free sets, fixed-point class and alternation depth of every node.

    Alternation depth follows the inductive definition: literals and
    constants have depth 0, boolean and modal operators take the maximum of
    their operands, and a mu-binder on ``p`` takes the maximum of 1, its
    body's depth, and ``1 + depth`` of every nu-subformula with ``p`` free
    (dually for nu). The quadratic scan over subtrees is fine at the sizes
    this package targets.
    """
    if not is_well_named(f):
        raise ValueError("alternation depth needs a well-named formula; call well_name first")
    nodes = [node for _, node in subformulas(f)]
    n = len(nodes)
    end = [0] * n

    def mark(i: int) -> int:
        j = i + 1
        for _ in nodes[i].children():
            j = mark(j)
        end[i] = j
        return j

    mark(0)

    free: list[frozenset[str]] = [frozenset()] * n
    depth = [0] * n
    kind = [FIXPOINT_NONE] * n
    binder = {}
    for i in range(n - 1, -1, -1):  # children have larger ids
        node = nodes[i]
        kids = []
        j = i + 1
        while j < end[i]:
            kids.append(j)
            j = end[j]
        if isinstance(node, (Atom, NegAtom)):
            free[i] = frozenset({node.name})
        elif isinstance(node, Binder):
            body = kids[0]
            free[i] = free[body] - {node.var}
            kind[i] = FIXPOINT_MU if isinstance(node, Mu) else FIXPOINT_NU
            binder[node.var] = i
            other = FIXPOINT_NU if isinstance(node, Mu) else FIXPOINT_MU
            d = max(1, depth[body])
            for k in range(body, end[i]):
                if kind[k] == other and node.var in free[k]:
                    d = max(d, depth[k] + 1)
            depth[i] = d
        else:
            for k in kids:
                free[i] |= free[k]
            depth[i] = max((depth[k] for k in kids), default=0)

    return AnalysisTable(
        nodes=tuple(nodes),
        free=tuple(free),
        depth=tuple(depth),
        fixpoint=tuple(kind),
        end=tuple(end),
        binder=binder,
    )


def alternation_depth(f: Formula) -> AnalysisTable:
    """Alias of :func:`analyse`; ``alternation_depth(f).depth[0]`` is the depth of ``f``."""
    return analyse(f)
