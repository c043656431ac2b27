import itertools
import math

import networkx as nx
import pytest
from hypothesis import settings

from abcindex.graph import Graph, from_edges

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def brute_chromatic(g: Graph) -> int:
    """Smallest k for which some assignment in k^n is proper."""
    edges = list(g.edges())
    for k in range(1, g.n + 1):
        for colors in itertools.product(range(k), repeat=g.n):
            if all(colors[u] != colors[v] for u, v in edges):
                return k
    return g.n


def brute_independence(g: Graph) -> int:
    best = 0
    for r in range(g.n + 1):
        for s in itertools.combinations(range(g.n), r):
            if all(not g.has_edge(u, v) for u, v in itertools.combinations(s, 2)):
                best = r
    return best


def labeled_connected_count(n: int) -> int:
    """Standard recurrence: all graphs minus those where vertex 1's component has size k < n."""
    c = {1: 1}
    for m in range(2, n + 1):
        total = 2 ** math.comb(m, 2)
        for k in range(1, m):
            total -= math.comb(m - 1, k - 1) * c[k] * 2 ** math.comb(m - k, 2)
        c[m] = total
    return c[n]


@pytest.fixture
def c5():
    return from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
