import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_graph
from hellyarc.errors import NoEssentialEdge, NotAdjacent, ResourceLimit, TwinsPresent, UniversalPresent
from hellyarc.graphs import (
    Graph,
    Maxclique,
    PairRelation,
    bundle_relation,
    enumerate_maxcliques,
    find_base_maxclique,
    is_essential_edge,
    lift_maxcliques,
    meet_subset,
    twin_reduce,
)


def brute_maxcliques(g):
    """Independent oracle: check all vertex subsets for maximal cliques."""
    verts = range(g.n)
    cliques = []
    for r in range(1, g.n + 1):
        for sub in combinations(verts, r):
            if all(g.adjacent(u, v) for u, v in combinations(sub, 2)):
                cliques.append(set(sub))
    maximal = [c for c in cliques if not any(c < d for d in cliques)]
    return sorted(tuple(sorted(c)) for c in maximal)


class TestTwinReduce:
    def test_fig3_is_already_reduced(self, fig3):
        red = twin_reduce(fig3)
        # all closed neighborhoods pairwise distinct and none equal to V
        masks = [fig3.closed_mask(v) for v in range(8)]
        assert len(set(masks)) == 8
        assert all(m != fig3.full_mask() for m in masks)
        assert red.universal_class is None
        assert red.core.n == 8
        assert all(len(c) == 1 for c in red.classes)

    def test_k2_collapses_to_empty_core(self):
        red = twin_reduce(Graph(2, [(0, 1)]))
        assert red.classes == ((0, 1),)
        assert red.universal_class == 0
        assert red.core.n == 0

    def test_star_keeps_leaves(self):
        star = Graph(4, [(0, 1), (0, 2), (0, 3)])
        # leaves have pairwise distinct closed neighborhoods
        assert len({star.closed_mask(v) for v in range(4)}) == 4
        red = twin_reduce(star)
        assert len(red.classes) == 4
        assert red.universal_class is not None
        assert red.classes[red.universal_class] == (0,)
        assert red.core.n == 3
        assert red.core.edge_count() == 0

    def test_core_is_reduced(self):
        rng = random.Random(5)
        for _ in range(100):
            g = random_graph(rng, rng.randint(0, 8), rng.random())
            core = twin_reduce(g).core
            masks = [core.closed_mask(v) for v in range(core.n)]
            assert len(set(masks)) == core.n
            assert all(m != core.full_mask() or core.n == 0 for m in masks)

    def test_lift_round_trip(self):
        rng = random.Random(6)
        for _ in range(150):
            g = random_graph(rng, rng.randint(1, 7), rng.random())
            red = twin_reduce(g)
            lifted = lift_maxcliques(red, enumerate_maxcliques(red.core))
            assert [c.members for c in lifted] == brute_maxcliques(g)


class TestBundleRelation:
    def test_p4_inner_pair_is_circle_cover(self, p4):
        assert bundle_relation(p4, 1, 2) is PairRelation.CIRCLE_COVER

    def test_p4_end_pair_is_containment(self, p4):
        assert bundle_relation(p4, 0, 1) is PairRelation.FIRST_INSIDE_SECOND
        assert bundle_relation(p4, 1, 0) is PairRelation.SECOND_INSIDE_FIRST

    def test_fig3_ab_is_strict_overlap(self, fig3):
        # union of the closed neighborhoods misses f and g
        union = fig3.closed_mask(0) | fig3.closed_mask(1)
        assert union != fig3.full_mask()
        assert bundle_relation(fig3, 0, 1) is PairRelation.STRICT_OVERLAP

    def test_non_adjacent_is_disjoint(self, p4):
        assert bundle_relation(p4, 0, 2) is PairRelation.DISJOINT

    def test_rejects_twins_and_universal(self):
        # triangle plus an isolated vertex: 0 and 1 are twins, nobody universal
        with pytest.raises(TwinsPresent):
            bundle_relation(Graph(4, [(0, 1), (0, 2), (1, 2)]), 0, 2)
        with pytest.raises(UniversalPresent):
            bundle_relation(Graph(3, [(0, 1), (0, 2)]), 1, 2)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 2**40 - 1), st.integers(2, 7))
    def test_total_and_symmetric_on_reduced_graphs(self, seed, n):
        rng = random.Random(seed)
        g = twin_reduce(random_graph(rng, n, rng.random())).core
        sym = {
            PairRelation.DISJOINT,
            PairRelation.CIRCLE_COVER,
            PairRelation.STRICT_OVERLAP,
        }
        for u in range(g.n):
            for v in range(u + 1, g.n):
                r1 = bundle_relation(g, u, v)
                r2 = bundle_relation(g, v, u)
                if r1 in sym:
                    assert r2 is r1
                elif r1 is PairRelation.FIRST_INSIDE_SECOND:
                    assert r2 is PairRelation.SECOND_INSIDE_FIRST
                else:
                    assert r2 is PairRelation.FIRST_INSIDE_SECOND


class TestMeetSubset:
    def test_fig3_examples(self, fig3):
        # N[b] ∩ N[e] = {b,c,d,e} is inside N[c] but not inside N[a]
        assert meet_subset(fig3, 1, 4, 2) is True
        assert meet_subset(fig3, 1, 4, 0) is False

    def test_requires_edge(self, p4):
        with pytest.raises(NotAdjacent):
            meet_subset(p4, 0, 2, 1)


class TestEssentialEdges:
    def test_fig3_ab(self, fig3):
        mc = is_essential_edge(fig3, 0, 1)
        assert mc is not None and mc.members == (0, 1, 2)

    def test_hajos_triangle_edge_not_essential(self, hajos):
        assert is_essential_edge(hajos, 0, 1) is None

    def test_hajos_outer_edge_essential(self, hajos):
        mc = is_essential_edge(hajos, 0, 3)
        assert mc is not None and mc.members == (0, 1, 3)

    def test_requires_edge(self, p4):
        with pytest.raises(NotAdjacent):
            is_essential_edge(p4, 0, 3)


class TestFindBaseMaxclique:
    def test_fig3(self, fig3):
        assert find_base_maxclique(fig3).members == (0, 1, 2)

    def test_hajos_scan_order(self, hajos):
        # edges inside the triangle are scanned first but are not essential
        assert find_base_maxclique(hajos).members == (0, 1, 3)

    def test_edgeless_fallback(self):
        g = Graph(3)
        assert find_base_maxclique(g).members == (0,)

    def test_octahedron_has_no_essential_edge(self):
        # K_{2,2,2}: for each edge the common neighborhood holds an antipodal
        # non-adjacent pair, so no edge lies in a unique maxclique
        g = Graph(6, [(u, v) for u in range(6) for v in range(u + 1, 6)
                      if v != u + 3 or u >= 3])
        with pytest.raises(NoEssentialEdge):
            find_base_maxclique(g)


class TestEnumerateMaxcliques:
    def test_fig3_caption_cliques(self, fig3):
        got = [c.members for c in enumerate_maxcliques(fig3)]
        assert got == [
            (0, 1, 2), (0, 7), (1, 2, 3, 4), (2, 3, 4, 5), (4, 5, 6), (5, 6, 7),
        ]

    def test_triangle(self):
        g = Graph(3, [(0, 1), (1, 2), (0, 2)])
        assert [c.members for c in enumerate_maxcliques(g)] == [(0, 1, 2)]

    def test_hajos(self, hajos):
        got = [c.members for c in enumerate_maxcliques(hajos)]
        assert got == [(0, 1, 2), (0, 1, 3), (0, 2, 5), (1, 2, 4)]

    def test_against_subset_oracle(self):
        rng = random.Random(9)
        for _ in range(120):
            g = random_graph(rng, rng.randint(0, 7), rng.random())
            assert [c.members for c in enumerate_maxcliques(g)] == brute_maxcliques(g)

    def test_resource_limit(self):
        # complete tripartite-ish graphs have exponentially many maxcliques
        n = 12
        g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                      if u // 2 != v // 2])
        with pytest.raises(ResourceLimit):
            enumerate_maxcliques(g, limit=3)

    def test_maxclique_of_essential_edge_is_unique(self, fig3):
        cliques = enumerate_maxcliques(fig3)
        for u, v in fig3.edges():
            mc = is_essential_edge(fig3, u, v)
            if mc is not None:
                containing = [c for c in cliques if u in c and v in c]
                assert containing == [Maxclique(mc.members)]
