import random

import numpy as np
import pytest

from hellyarc.arcs import arc_mask
from hellyarc.errors import NotAClique, NotRealizable, TwinsPresent
from hellyarc.graphs import Graph, Maxclique, twin_reduce
from hellyarc.matrix import (
    apply_flip_tables,
    flip_matrix,
    flip_relation_table,
    intersection_matrix,
    matrix_of_interval_system,
    reconstruct_interval_system,
    relation_table,
)
from hellyarc.testkit import brute_force_is_hca, random_hca_graph, reference_matrix


class TestIntersectionMatrix:
    def test_p4_fixture(self, p4):
        M = intersection_matrix(p4)
        expected = np.array(
            [[2, 2, 0, 0], [2, 6, 4, 0], [0, 4, 6, 2], [0, 0, 2, 2]]
        )
        assert np.array_equal(M, expected)

    def test_p4_matches_explicit_sharp_model(self, p4):
        # independent check against the hand witness on 8 points
        from hellyarc.arcs import Arc, ArcModel

        witness = ArcModel(8, {0: Arc(3, 4), 1: Arc(1, 6), 2: Arc(5, 2), 3: Arc(7, 8)})
        masks = {v: arc_mask(8, a) for v, a in witness.arcs.items()}
        M = intersection_matrix(p4)
        for u in range(4):
            for v in range(4):
                assert M[u, v] == (masks[u] & masks[v]).bit_count()

    def test_fig3_entries(self, fig3):
        M = intersection_matrix(fig3)
        assert M[0, 0] == 5 and M[1, 1] == 5
        assert M[0, 1] == 2
        assert M[1, 2] == M[1, 1]  # N[b] inside N[c]

    def test_non_adjacent_pairs_are_zero(self, fig3):
        M = intersection_matrix(fig3)
        for u in range(8):
            for v in range(8):
                if u != v and not fig3.adjacent(u, v):
                    assert M[u, v] == 0

    def test_requires_reduced_graph(self):
        with pytest.raises(TwinsPresent):
            intersection_matrix(Graph(4, [(0, 1), (0, 2), (1, 2)]))

    def test_matches_reference_on_random_cores(self):
        rng = random.Random(17)
        done = 0
        while done < 60:
            g, _ = random_hca_graph(rng.randint(2, 8), rng.randrange(10**9))
            core = twin_reduce(g).core
            if core.n < 2 or not brute_force_is_hca(core, clique_bound=12):
                continue
            assert np.array_equal(intersection_matrix(core), reference_matrix(core, clique_bound=12))
            done += 1


class TestFlipMatrix:
    def test_p4_fixture_values(self, p4):
        M = intersection_matrix(p4)
        L = flip_matrix(p4, M, Maxclique((0, 1)))
        assert L[0, 0] == 8  # flipped end arc is the complete designated arc
        assert L[1, 1] == 4
        assert L[0, 1] == 4
        assert L[0, 2] == 6  # disjoint from the flipped arc's partner row
        assert L[1, 2] == 4
        assert L[2, 3] == M[2, 3]  # both outside the clique: unchanged

    def test_requires_clique(self, p4):
        with pytest.raises(NotAClique):
            flip_matrix(p4, intersection_matrix(p4), Maxclique((0, 2)))

    def test_algebraic_involution(self):
        # reapplying the tables with the flipped relation classification
        # returns the original matrix entrywise
        rng = random.Random(23)
        done = 0
        while done < 40:
            g, _ = random_hca_graph(rng.randint(2, 8), rng.randrange(10**9))
            core = twin_reduce(g).core
            if core.n < 2:
                continue
            try:
                M = intersection_matrix(core)
            except Exception:
                continue
            from hellyarc.graphs import find_base_maxclique
            from hellyarc.errors import NoEssentialEdge

            try:
                C = find_base_maxclique(core)
            except NoEssentialEdge:
                continue
            members = set(C.members)
            rel = relation_table(core)
            L = apply_flip_tables(M, members, rel, core.n)
            rel2 = flip_relation_table(rel, members, core.n)
            back = apply_flip_tables(L, members, rel2, core.n)
            assert np.array_equal(back, M)
            done += 1


class TestReconstruct:
    def test_single_interval(self):
        model = reconstruct_interval_system(np.array([[3]]))
        assert model.m == 3
        assert model.arcs[0].start == 1 and model.arcs[0].end == 3

    def test_p4_flipped_matrix(self, p4):
        M = intersection_matrix(p4)
        L = flip_matrix(p4, M, Maxclique((0, 1)))
        model = reconstruct_interval_system(L)
        assert model.is_interval_system()
        assert np.array_equal(matrix_of_interval_system(model, list(range(4))), L)

    def test_three_mutual_overlaps_not_realizable(self):
        M = np.array([[2, 1, 1], [1, 2, 1], [1, 1, 2]])
        with pytest.raises(NotRealizable):
            reconstruct_interval_system(M)

    def test_identical_rows_share_an_interval(self):
        M = np.array([[3, 3, 1], [3, 3, 1], [1, 1, 2]])
        model = reconstruct_interval_system(M)
        assert model.arcs[0] == model.arcs[1]
        assert np.array_equal(matrix_of_interval_system(model, [0, 1, 2]), M)

    def test_round_trip_on_random_interval_systems(self):
        from hellyarc.arcs import Arc, ArcModel

        rng = random.Random(29)
        for _ in range(150):
            k = rng.randint(1, 7)
            m = rng.randint(k, 3 * k)
            arcs = {}
            for e in range(k):
                s = rng.randint(1, m)
                arcs[e] = Arc(s, rng.randint(s, m))
            # drop uncovered points so the matrix determines the system
            model = ArcModel(m, arcs)
            M = matrix_of_interval_system(model, list(range(k)))
            rebuilt = reconstruct_interval_system(M)
            assert np.array_equal(
                matrix_of_interval_system(rebuilt, list(range(k))), M
            )

    def test_invalid_matrices_rejected(self):
        with pytest.raises(NotRealizable):
            reconstruct_interval_system(np.array([[2, 1], [2, 1]]))  # asymmetric
        with pytest.raises(NotRealizable):
            reconstruct_interval_system(np.array([[0]]))  # zero diagonal
        with pytest.raises(NotRealizable):
            reconstruct_interval_system(np.array([[2, 3], [3, 2]]))  # overlap too big
