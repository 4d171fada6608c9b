import random

import pytest
from hypothesis import strategies as st

from smallworlds.graph import Graph


@st.composite
def connected_graphs(draw, min_n=2, max_n=10):
    """Random connected graph: a random spanning tree plus extra edges."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    edges = set()
    for i in range(1, n):
        j = draw(st.integers(min_value=0, max_value=i - 1))
        edges.add((j, i))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    extra = draw(st.lists(st.sampled_from(pairs), max_size=2 * n))
    edges.update(extra)
    return Graph(n, frozenset(edges))


@st.composite
def decreasing_int_arrays(draw, min_len=1, max_len=12, min_value=1, max_value=12):
    vals = draw(st.lists(st.integers(min_value=min_value, max_value=max_value),
                         min_size=min_len, max_size=max_len))
    return tuple(sorted(vals, reverse=True))


def random_connected_graph(rng: random.Random, n: int, p: float = 0.3) -> Graph:
    edges = set()
    for i in range(1, n):
        edges.add((rng.randrange(i), i))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    return Graph(n, frozenset(edges))


@pytest.fixture
def rng():
    return random.Random(12345)
