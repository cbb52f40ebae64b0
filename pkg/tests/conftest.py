from __future__ import annotations

import random
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from lexcycle.graph import Graph, Ordering

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

GOLDEN = Path(__file__).parent / "golden"


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    p = rng.random() if p is None else p
    names = [f"v{i}" for i in range(n)]
    edges = [(names[i], names[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph(names, edges)


def random_order(rng: random.Random, g: Graph) -> Ordering:
    names = list(g.vertices)
    rng.shuffle(names)
    return Ordering(names)


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 10):
    n = draw(st.integers(min_n, max_n))
    names = [f"v{i}" for i in range(n)]
    pairs = [(names[i], names[j]) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(names, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def graph_and_order(draw, min_n: int = 1, max_n: int = 10):
    g = draw(graphs(min_n, max_n))
    return g, Ordering(draw(st.permutations(list(g.vertices))))


@pytest.fixture
def rng():
    return random.Random(12345)
