from __future__ import annotations

from itertools import combinations

import hypothesis
import pytest
from hypothesis import strategies as st

from kextend import (
    Graph,
    complete_bipartite,
    cycle_graph,
    from_edges,
    path_graph,
)
from kextend.rng import SplitMix64

hypothesis.settings.register_profile("suite", deadline=None)
hypothesis.settings.load_profile("suite")


@pytest.fixture
def c4() -> Graph:
    return cycle_graph(4)


@pytest.fixture
def p4() -> Graph:
    return path_graph(4)


@pytest.fixture
def c6() -> Graph:
    return cycle_graph(6)


@pytest.fixture
def c8() -> Graph:
    return cycle_graph(8)


@pytest.fixture
def k33() -> Graph:
    return complete_bipartite(3, 3)


@pytest.fixture
def k44() -> Graph:
    return complete_bipartite(4, 4)


@pytest.fixture
def k13() -> Graph:
    return from_edges(4, [(0, 1), (0, 2), (0, 3)])


def exhaustive_graphs(n: int):
    """All labeled graphs on n vertices, in edge-code order."""
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield from_edges(n, (pairs[j] for j in range(len(pairs))
                             if code >> j & 1))


def seeded_random_graph(n: int, rng: SplitMix64, p: float = 0.5) -> Graph:
    edges = [(u, v) for u, v in combinations(range(n), 2)
             if rng.next_float() < p]
    return from_edges(n, edges)


def seeded_random_bipartite(half: int, rng: SplitMix64,
                            p: float = 0.5) -> Graph:
    """Balanced bipartite draw on sides {0..half-1} and {half..2*half-1}."""
    edges = [(x, half + y) for x in range(half) for y in range(half)
             if rng.next_float() < p]
    return from_edges(2 * half, edges)


@st.composite
def graphs(draw, max_n: int = 10, min_n: int = 0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    if not pairs:
        return from_edges(n, [])
    picked = draw(st.lists(st.sampled_from(pairs), unique=True,
                           max_size=len(pairs)))
    return from_edges(n, picked)
