import random

import pytest

from hellyarc.graphs import Graph

# Vertex key for the 8-vertex wheel-like fixture: a..h = 0..7.
FIG3_EDGES = [
    (0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4),
    (2, 5), (3, 5), (4, 5), (4, 6), (5, 6), (5, 7), (6, 7), (7, 0),
]

# Triangle 0,1,2 plus one degree-2 vertex on each triangle edge
# (3 adj 0,1; 4 adj 1,2; 5 adj 2,0).
HAJOS_EDGES = [
    (0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (4, 1), (4, 2), (5, 2), (5, 0),
]

# Triangle 0,1,2 with a pendant on each vertex; not HCA.
TRIANGLE_PENDANTS_EDGES = [(0, 1), (1, 2), (0, 2), (3, 0), (4, 1), (5, 2)]


@pytest.fixture
def fig3():
    return Graph(8, FIG3_EDGES)


@pytest.fixture
def hajos():
    return Graph(6, HAJOS_EDGES)


@pytest.fixture
def triangle_pendants():
    return Graph(6, TRIANGLE_PENDANTS_EDGES)


@pytest.fixture
def p4():
    return Graph(4, [(0, 1), (1, 2), (2, 3)])


def permute_graph(g: Graph, perm: list[int]) -> Graph:
    return Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph(n, edges)
