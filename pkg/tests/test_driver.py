import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mucheck.compile import compile_formula
from mucheck.driver import check_game, check_semantic, sat_bounded
from mucheck.formula import Bottom, Top, analyse, parse_formula
from mucheck.game import build_acceptance_game
from mucheck.randgen import random_formula, random_kripke
from mucheck.solver import verify_strategy

seeds = st.integers(0, 2**32)

EXAMPLES = [
    ("self_loop", "nu x. p & [] x", True),
    ("dead_end", "mu p. [] p", True),
    ("self_loop", "mu p. [] p", False),
]


@pytest.mark.parametrize("system, text, expected", EXAMPLES)
def test_both_methods_on_examples(system, text, expected, request):
    p = request.getfixturevalue(system)
    f = parse_formula(text)
    sem, gam = check_semantic(p, f), check_game(p, f)
    assert sem.verdict == gam.verdict == expected
    assert sem.method == "semantic" and gam.method == "game"


def test_constants(rng):
    for _ in range(20):
        p = random_kripke(rng)
        assert not check_game(p, Bottom()).verdict
        assert check_game(p, Top()).verdict


def test_report_contents(self_loop):
    f = parse_formula("nu x. p & [] x")
    sem = check_semantic(self_loop, f)
    assert sem.iterations and all(n <= 1 for n in sem.iterations)
    gam = check_game(self_loop, f)
    assert gam.game_vertices > 0 and gam.game_edges > 0
    assert gam.witness is not None and gam.witness.player == 0


def test_witness_verifies(rng):
    for _ in range(50):
        p = random_kripke(rng)
        f = random_formula(rng)
        rep = check_game(p, f)
        if rep.verdict:
            g = build_acceptance_game(compile_formula(f), p)
            reach = {g.initial}
            stack = [g.initial]
            while stack:
                v = stack.pop()
                nxt = (rep.witness.moves[v],) if g.owner[v] == 0 else g.successors(v)
                for w in nxt:
                    if w not in reach:
                        reach.add(w)
                        stack.append(w)
            assert verify_strategy(g, rep.witness.restrict(reach), reach)
        else:
            assert rep.witness is None


@settings(max_examples=300, deadline=None)
@given(seeds)
def test_methods_agree(seed):
    r = random.Random(seed)
    p = random_kripke(r)
    f = random_formula(r, max_nodes=12)
    assert check_semantic(p, f).verdict == check_game(p, f).verdict


def test_methods_agree_on_deep_alternation(rng):
    f = parse_formula("mu X. nu Y. mu Z. ((p & <>X) | (q & <>Y) | <>Z)")
    assert analyse(f).depth[0] == 3
    for _ in range(50):
        p = random_kripke(rng, props=("p", "q"))
        assert check_semantic(p, f).verdict == check_game(p, f).verdict


class TestSat:
    def test_infinite_path(self):
        m = sat_bounded(parse_formula("nu p. <> p"), 1)
        assert m is not None
        assert m.structure.transitions == {(m.initial, m.initial)}

    @pytest.mark.parametrize("text", ["mu p. p", "p & !p"])
    def test_no_model(self, text):
        assert sat_bounded(parse_formula(text), 3) is None

    def test_needs_two_states(self):
        f = parse_formula("p & <> !p")
        assert sat_bounded(f, 1) is None
        m = sat_bounded(f, 2)
        assert len(m.structure.states) == 2

    @pytest.mark.parametrize(
        "text", ["<> <> q & [] !q", "nu X. <> X & mu Y. (p | <> Y)", "[] false & q"]
    )
    def test_models_verify(self, text):
        f = parse_formula(text)
        m = sat_bounded(f, 3)
        assert m is not None
        assert check_semantic(m, f).verdict and check_game(m, f).verdict

    def test_bound_zero(self):
        with pytest.raises(ValueError):
            sat_bounded(Top(), 0)
