import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from mucheck.game import ParityGame  # noqa: E402
from mucheck.kripke import make_pointed  # noqa: E402

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture
def example_arena():
    """Seven-vertex arena with circles z1, z2, z5, z6 (Player 0) and boxes z0, z3, z4.

    Colours and the edges among z2..z6 are read off the two plays discussed
    with it; the colours of z0, z1 and their edges are not recoverable and
    chosen here.
    """
    owner = {"z0": 1, "z1": 0, "z2": 0, "z3": 1, "z4": 1, "z5": 0, "z6": 0}
    colour = {"z0": 1, "z1": 3, "z2": 1, "z3": 3, "z4": 2, "z5": 4, "z6": 2}
    edges = {
        ("z0", "z1"), ("z0", "z3"), ("z1", "z0"), ("z1", "z2"),
        ("z2", "z4"), ("z3", "z2"), ("z4", "z2"), ("z4", "z6"),
        ("z5", "z2"), ("z6", "z3"), ("z6", "z5"),
    }
    return ParityGame(tuple(sorted(owner)), owner, colour, frozenset(edges))


@pytest.fixture
def dead_end():
    return make_pointed({"s": set()}, [], "s")


@pytest.fixture
def self_loop():
    return make_pointed({"s": {"p"}}, [("s", "s")], "s")
