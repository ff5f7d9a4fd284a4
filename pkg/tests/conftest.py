from __future__ import annotations

import random

import pytest

from ratsweep.core import CoprimePair
from ratsweep.diagram import PathDiagram, build_diagram
from ratsweep.inversion import canonical_start
from ratsweep.oracle import coprime_pairs, enumerate_dyck

SMALL_PAIRS = coprime_pairs(9)


def random_valid_diagram(rng: random.Random, max_sum: int = 8) -> PathDiagram:
    """A diagram over a random small pair: random Dyck word, random weakly
    increasing ranks obtained by adding a nondecreasing bump to the
    canonical start (which keeps blue starts >= n)."""
    pair = rng.choice(coprime_pairs(max_sum))
    word = rng.choice(enumerate_dyck(pair))
    bump = 0
    ranks = []
    for base in canonical_start(word, pair):
        bump += rng.randrange(3)
        ranks.append(base + bump)
    return build_diagram(word, ranks, pair)


@pytest.fixture(scope="session")
def rng() -> random.Random:
    return random.Random(0x5EE9)
