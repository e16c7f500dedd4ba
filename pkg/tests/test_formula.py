import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mucheck.formula import (
    FIXPOINT_MU,
    FIXPOINT_NONE,
    FIXPOINT_NU,
    And,
    Atom,
    Bottom,
    Box,
    Diamond,
    FormulaSyntaxError,
    Mu,
    NegAtom,
    Nu,
    Or,
    Top,
    analyse,
    free_vars,
    is_well_named,
    parse_formula,
    preorder,
    size,
    subformulas,
    to_text,
    well_name,
)
from mucheck.randgen import random_formula

# mu p1 ( (nu q (p0 & q)) | <> p1 ), the first alternation example after renaming
ALT_ONE = Mu("p1", Or(Nu("p2", And(Atom("p0"), Atom("p2"))), Diamond(Atom("p1"))))
ALT_TWO = Nu("p2", Mu("p1", Or(And(Atom("p2"), Atom("p0")), Atom("p1"))))


def random_formulas(**kw):
    return st.integers(0, 2**32).map(lambda seed: random_formula(random.Random(seed), **kw))


class TestParse:
    def test_mu_diamond(self):
        assert parse_formula("mu X. <> X") == Mu("X", Diamond(Atom("X")))

    def test_alternation_example_with_explicit_scope(self):
        assert parse_formula("mu p1. ((nu p2. (p0 & p2)) | <> p1)") == ALT_ONE

    def test_binder_body_extends_right(self):
        # without the extra parentheses the nu body swallows "| <> p1"
        f = parse_formula("mu p1. (nu p2. (p0 & p2) | <> p1)")
        assert f == Mu("p1", Nu("p2", Or(And(Atom("p0"), Atom("p2")), Diamond(Atom("p1")))))

    @pytest.mark.parametrize(
        "text, expected",
        [
            ("true", Top()),
            ("false", Bottom()),
            ("!p", NegAtom("p")),
            ("a | b & c", Or(Atom("a"), And(Atom("b"), Atom("c")))),
            ("a & b & c", And(And(Atom("a"), Atom("b")), Atom("c"))),
            ("a | b | c", Or(Or(Atom("a"), Atom("b")), Atom("c"))),
            ("<>a & []b", And(Diamond(Atom("a")), Box(Atom("b")))),
            ("[]<>!p", Box(Diamond(NegAtom("p")))),
            ("a & nu X. X | b", And(Atom("a"), Nu("X", Or(Atom("X"), Atom("b"))))),
            ("(mu X. X) | b", Or(Mu("X", Atom("X")), Atom("b"))),
            ("mu X. # comment\n  <>X", Mu("X", Diamond(Atom("X")))),
            ("  x_1  ", Atom("x_1")),
        ],
    )
    def test_precedence(self, text, expected):
        assert parse_formula(text) == expected

    @pytest.mark.parametrize(
        "text",
        ["true & ", "", "mu . X", "mu X X", "(a | b", "a b", "a $ b", "mu true. a", "<>"],
    )
    def test_syntax_errors(self, text):
        with pytest.raises(FormulaSyntaxError):
            parse_formula(text)

    def test_error_position(self):
        with pytest.raises(FormulaSyntaxError) as exc:
            parse_formula("a &\n  | b")
        assert (exc.value.line, exc.value.column) == (2, 3)

    @pytest.mark.parametrize("text", ["!(p)", "!true", "!<>p", "!!p"])
    def test_negation_only_on_atoms(self, text):
        with pytest.raises(FormulaSyntaxError, match="non-atom"):
            parse_formula(text)

    @pytest.mark.parametrize("text", ["mu X. !X", "nu X. a & <>!X", "mu X. nu Y. !X"])
    def test_bound_variable_negated(self, text):
        with pytest.raises(FormulaSyntaxError, match="negated"):
            parse_formula(text)

    def test_inner_binder_shields_negation(self):
        # the negated X belongs to the inner binder, which is itself rejected
        with pytest.raises(FormulaSyntaxError):
            parse_formula("mu X. nu X. !X")
        # a negated name that is not the binder's variable is fine
        assert parse_formula("mu X. !p | X") == Mu("X", Or(NegAtom("p"), Atom("X")))


@settings(max_examples=200, deadline=None)
@given(random_formulas(max_nodes=20))
def test_print_parse_round_trip(f):
    assert parse_formula(to_text(f)) == f


class TestWellName:
    def test_shadowing_forces_rename(self):
        f = Mu("X", Nu("X", Atom("X")))
        assert well_name(f) == Mu("X", Nu("X1", Atom("X1")))

    def test_already_well_named(self):
        f = Mu("X", Diamond(Atom("X")))
        assert well_name(f) == f

    def test_inner_binder_captures_outer_name(self):
        # mu p1 ( nu p1 (p0 & p1) | <> p1 ): the inner binder captures p1
        f = Mu("p1", Or(Nu("p1", And(Atom("p0"), Atom("p1"))), Diamond(Atom("p1"))))
        w = well_name(f)
        inner = w.body.left
        assert isinstance(inner, Nu) and inner.var not in {"p0", "p1"}
        assert w == Mu("p1", Or(Nu(inner.var, And(Atom("p0"), Atom(inner.var))), Diamond(Atom("p1"))))

    def test_bound_name_clashing_with_free_prop(self):
        f = Or(Mu("p", Diamond(Atom("p"))), Atom("p"))
        w = well_name(f)
        assert w == Or(Mu("p1", Diamond(Atom("p1"))), Atom("p"))
        assert is_well_named(w)

    def test_fresh_names_avoid_existing_identifiers(self):
        f = And(Mu("X", Atom("X")), And(Mu("X", Atom("X")), Atom("X1")))
        w = well_name(f)
        assert w == And(Mu("X", Atom("X")), And(Mu("X2", Atom("X2")), Atom("X1")))

    @settings(max_examples=200, deadline=None)
    @given(random_formulas(max_nodes=16), st.data())
    def test_properties(self, f, data):
        # shadow things deliberately by reusing one name for every binder
        clash = data.draw(st.sampled_from(["X", "p"]))

        def collapse(g):
            if isinstance(g, (Mu, Nu)):
                return type(g)(clash, collapse(g.body))
            if isinstance(g, (And, Or)):
                return type(g)(collapse(g.left), collapse(g.right))
            if isinstance(g, (Box, Diamond)):
                return type(g)(collapse(g.body))
            return g

        for g in (f, collapse(f)):
            w = well_name(g)
            assert is_well_named(w)
            assert free_vars(w) == free_vars(g)
            assert well_name(w) == w
            assert [type(n) for n in preorder(w)] == [type(n) for n in preorder(g)]


class TestFreeVars:
    def test_constants(self):
        assert free_vars(Top()) == frozenset()
        assert free_vars(Bottom()) == frozenset()

    def test_literals(self):
        assert free_vars(Atom("p")) == {"p"}
        assert free_vars(NegAtom("p")) == {"p"}

    def test_nested_binders(self):
        assert free_vars(ALT_TWO) == {"p0"}


class TestSubformulas:
    def test_leaf(self):
        assert subformulas(Atom("p")) == [(0, Atom("p"))]

    def test_preorder_numbering(self):
        f = parse_formula("mu q0. (q0 | q1)")
        assert [g for _, g in subformulas(f)] == [
            f,
            Or(Atom("q0"), Atom("q1")),
            Atom("q0"),
            Atom("q1"),
        ]
        assert [i for i, _ in subformulas(f)] == [0, 1, 2, 3]

    def test_repeated_subtrees_kept(self):
        f = And(Top(), Bottom())
        assert [g for _, g in subformulas(f)] == [f, Top(), Bottom()]
        g = And(Atom("p"), Atom("p"))
        assert len(subformulas(g)) == 3 == size(g)


class TestAlternationDepth:
    def test_first_example(self):
        assert analyse(ALT_ONE).depth[0] == 1

    def test_second_example(self):
        assert analyse(ALT_TWO).depth[0] == 2

    @pytest.mark.parametrize("f", [Atom("p"), NegAtom("p"), Top(), Bottom(), And(Atom("p"), Box(Top()))])
    def test_fixpoint_free(self, f):
        assert set(analyse(f).depth) == {0}

    def test_requires_well_named(self):
        with pytest.raises(ValueError):
            analyse(Mu("X", Nu("X", Atom("X"))))

    def test_fixpoint_classes(self):
        t = analyse(ALT_TWO)
        assert t.fixpoint[:2] == (FIXPOINT_NU, FIXPOINT_MU)
        assert set(t.fixpoint[2:]) == {FIXPOINT_NONE}

    def test_independent_nested_binders_do_not_alternate(self):
        # inner mu does not mention X
        assert analyse(parse_formula("nu X. [] X & mu Y. <> Y")).depth[0] == 1

    def test_three_alternations(self):
        f = parse_formula("mu X. nu Y. mu Z. (X | Y | <>Z)")
        assert analyse(f).depth[0] == 3

    @settings(max_examples=200, deadline=None)
    @given(random_formulas(max_nodes=16))
    def test_depth_monotone_in_subformulas(self, f):
        t = analyse(f)
        for i in range(len(t)):
            for j in t.subtree(i):
                assert t.depth[j] <= t.depth[i]
            if t.fixpoint[i] != FIXPOINT_NONE:
                assert t.depth[i] >= 1
        if all(k == FIXPOINT_NONE for k in t.fixpoint):
            assert t.depth[0] == 0

    @settings(max_examples=100, deadline=None)
    @given(random_formulas(max_nodes=16))
    def test_table_free_sets_match_free_vars(self, f):
        t = analyse(f)
        for i, node in enumerate(t.nodes):
            assert t.free[i] == free_vars(node)
