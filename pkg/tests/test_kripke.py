import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mucheck.kripke import (
    KripkeError,
    KripkeStructure,
    make_pointed,
    parse_kripke,
    predecessors,
    print_kripke,
    successors,
)
from mucheck.randgen import random_kripke

seeds = st.integers(0, 2**32)

CHAIN = make_pointed({"a": [], "b": [], "c": []}, [("a", "b"), ("b", "c")], "a").structure


def test_successors_empty_relation():
    k = make_pointed({"s": []}, [], "s").structure
    assert successors(k, "s") == frozenset()


def test_successors_chain():
    assert successors(CHAIN, "a") == {"b"}


def test_successors_self_loop():
    k = make_pointed({"s": []}, [("s", "s")], "s").structure
    assert successors(k, "s") == {"s"}


def test_predecessors_chain():
    assert predecessors(CHAIN, "c") == {"b"}
    assert predecessors(CHAIN, "a") == frozenset()


def test_predecessors_diamond():
    k = make_pointed({"a": [], "b": [], "c": []}, [("a", "c"), ("b", "c")], "a").structure
    assert predecessors(k, "c") == {"a", "b"}


def test_unknown_state():
    with pytest.raises(KripkeError):
        successors(CHAIN, "zz")
    with pytest.raises(KripkeError):
        predecessors(CHAIN, "zz")


@settings(max_examples=100, deadline=None)
@given(seeds)
def test_successor_predecessor_adjoint(seed):
    k = random_kripke(random.Random(seed)).structure
    for s in k.states:
        for t in k.states:
            assert (t in successors(k, s)) == (s in predecessors(k, t))


def test_structure_invariants():
    with pytest.raises(KripkeError):
        KripkeStructure((), frozenset(), {})
    with pytest.raises(KripkeError):
        KripkeStructure(("a",), frozenset({("a", "b")}), {"a": frozenset()})


class TestTextFormat:
    def test_single_state(self):
        p = parse_kripke("state s0 p\ninit s0")
        assert p.initial == "s0"
        assert p.structure.states == ("s0",)
        assert p.structure.labels["s0"] == {"p"}
        assert p.structure.transitions == frozenset()

    def test_comments_and_blank_lines(self):
        p = parse_kripke("# a model\n\nstate a x y  # two props\nstate b\ntrans a b\ninit a\n")
        assert p.structure.labels == {"a": {"x", "y"}, "b": frozenset()}
        assert p.structure.transitions == {("a", "b")}

    @pytest.mark.parametrize(
        "text, message",
        [
            ("state s0\ntrans s0 s9\ninit s0", "undeclared"),
            ("state s0\nstate s0\ninit s0", "duplicate"),
            ("state s0\ninit s1", "not declared"),
            ("state s0", "no 'init'"),
            ("state s0\ninit s0\ninit s0", "second"),
            ("state s0\ninit s0\nfoo", "unknown keyword"),
            ("state s0\ntrans s0\ninit s0", "two state ids"),
        ],
    )
    def test_errors(self, text, message):
        with pytest.raises(KripkeError, match=message):
            parse_kripke(text)

    def test_three_cycle_round_trip(self):
        p = make_pointed(
            {"a": ["p"], "b": [], "c": ["p", "q"]}, [("a", "b"), ("b", "c"), ("c", "a")], "b"
        )
        assert parse_kripke(print_kripke(p)) == p

    @settings(max_examples=100, deadline=None)
    @given(seeds)
    def test_random_round_trip(self, seed):
        p = random_kripke(random.Random(seed))
        text = print_kripke(p)
        assert parse_kripke(text) == p
        assert print_kripke(parse_kripke(text)) == text
