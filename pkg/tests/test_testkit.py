import random

import numpy as np
import pytest

from conftest import permute_graph
from hellyarc.arcs import validate_model
from hellyarc.canon import Hypergraph
from hellyarc.errors import NotCircularArc, ResourceLimit
from hellyarc.graphs import Graph
from hellyarc.matrix import intersection_matrix
from hellyarc.testkit import (
    brute_force_canonical_model,
    brute_force_is_hca,
    brute_force_iso,
    random_hca_graph,
    reference_matrix,
)


class TestBruteForceIsHca:
    def test_paper_fixtures(self, hajos, triangle_pendants, p4):
        assert brute_force_is_hca(hajos) is True
        assert brute_force_is_hca(triangle_pendants) is False
        assert brute_force_is_hca(p4) is True  # interval graphs are HCA

    def test_resource_limit(self):
        g = Graph(12, [(u, v) for u in range(12) for v in range(u + 1, 12)
                       if u // 2 != v // 2])
        with pytest.raises(ResourceLimit):
            brute_force_is_hca(g, clique_bound=5)

    def test_cycles_are_hca(self):
        for n in (4, 5, 6, 7):
            cn = Graph(n, [(i, (i + 1) % n) for i in range(n)])
            assert brute_force_is_hca(cn)

    def test_universal_vertices_harmless(self):
        # wheel graph: a cycle plus a universal hub
        n = 6
        edges = [(i, (i + 1) % n) for i in range(n)] + [(i, n) for i in range(n)]
        assert brute_force_is_hca(Graph(n + 1, edges))


class TestBruteForceIso:
    def test_permuted_copy(self, hajos):
        h = permute_graph(hajos, [2, 4, 1, 5, 0, 3])
        mapping = brute_force_iso(hajos, h)
        assert mapping is not None
        for u, v in hajos.edges():
            assert h.adjacent(mapping[u], mapping[v])

    def test_p4_vs_claw(self, p4):
        claw = Graph(4, [(0, 1), (0, 2), (0, 3)])
        assert brute_force_iso(p4, claw) is None

    def test_empty_graphs(self):
        assert brute_force_iso(Graph(0), Graph(0)) == {}

    def test_limit(self):
        with pytest.raises(ResourceLimit):
            brute_force_iso(Graph(9), Graph(9))


class TestBruteForceCanonicalModel:
    def test_pair_edge(self):
        form = brute_force_canonical_model(Hypergraph.build(2, [((0, 1), 1)]))
        assert form.triples() == [(1, 2, 1)]

    def test_empty(self):
        form = brute_force_canonical_model(Hypergraph.build(0, []))
        assert form.circle_size() == 0

    def test_claw_rejected(self):
        h = Hypergraph.build(4, [((0, 1), 1), ((0, 2), 1), ((0, 3), 1)])
        with pytest.raises(NotCircularArc):
            brute_force_canonical_model(h)

    def test_invariance_under_relabeling(self):
        rng = random.Random(61)
        for _ in range(40):
            K = rng.randint(2, 5)
            edges = []
            for _ in range(rng.randint(1, 4)):
                s = rng.randrange(K)
                ln = rng.randint(1, K)
                edges.append((tuple((s + i) % K for i in range(ln)), 1))
            h1 = Hypergraph.build(K, edges)
            perm = list(range(K))
            rng.shuffle(perm)
            h2 = Hypergraph.build(K, [(tuple(perm[v] for v in m), c) for m, c in edges])
            assert (
                brute_force_canonical_model(h1).encoding
                == brute_force_canonical_model(h2).encoding
            )


class TestReferenceMatrix:
    def test_p4(self, p4):
        assert np.array_equal(reference_matrix(p4), intersection_matrix(p4))

    def test_fig3_entries(self, fig3):
        M = reference_matrix(fig3)
        assert M[0, 0] == 5 and M[0, 1] == 2

    def test_hajos(self, hajos):
        assert np.array_equal(reference_matrix(hajos), intersection_matrix(hajos))


class TestRandomHcaGraph:
    def test_seed_stability(self):
        g1, m1 = random_hca_graph(6, 1)
        g2, m2 = random_hca_graph(6, 1)
        assert g1 == g2 and m1 == m2

    def test_witness_validates(self):
        rng = random.Random(67)
        for _ in range(40):
            n = rng.randint(1, 9)
            g, model = random_hca_graph(n, rng.randrange(10**9))
            assert validate_model(g, model, {v: v for v in range(n)}).ok

    def test_single_vertex(self):
        g, model = random_hca_graph(1, 5)
        assert g.n == 1 and len(model.arcs) == 1

    def test_oracle_agrees(self):
        rng = random.Random(71)
        for _ in range(40):
            g, _ = random_hca_graph(rng.randint(1, 7), rng.randrange(10**9))
            assert brute_force_is_hca(g, clique_bound=16)
