"""
Tests for the constructive bounds: two disjoint sets, the bipartite
partition, rotation-sweeps and the Grundy-coloring bound
"""

from fractions import Fraction

import pytest
from hypothesis import assume, given, settings as hyp_settings
from hypothesis import strategies as st

from isoset.exceptions import (
    Disconnected,
    NotBadEdge,
    Not3Colorable,
    NotBipartite,
    TooSmall,
    UnassignedVertex,
    WrongK,
)
from isoset.services.coloring import is_proper
from isoset.services.constructive import (
    bipartite_bound,
    bipartite_partition3,
    bound_for,
    build_sweep,
    complete_isolating,
    eliminate_bad_edges,
    format_trace,
    k_colorable_bound,
    pred,
    rotate,
    succ,
    tripartite_bound,
    two_disjoint,
    verify_claim_bounds,
)
from isoset.services.gadgets import gen_jewel, gen_M
from isoset.services.generators import gen_random, make_spec
from isoset.services.graph_core import (
    Coloring,
    VertexSet,
    bipartition,
    closed_neighborhood_mask,
    empty_graph,
    from_edge_list,
)
from isoset.services.isolation import (
    bad_edges,
    is_independent_dominating,
    is_independent_isolating,
    verify_partition,
)
from tests.strategies import graphs, seeds


def test_color_steps():
    assert [succ(c) for c in (1, 2, 3)] == [2, 3, 1]
    assert [pred(c) for c in (1, 2, 3)] == [3, 1, 2]


def test_bounds():
    assert bound_for("bipartite", 9) == 3
    assert bound_for("sweep", 8) == 3
    assert bound_for("grundy", 4, 4) == Fraction(12, 7)
    with pytest.raises(ValueError):
        bound_for("grundy", 10, 3)


class TestTwoDisjoint:
    def test_triangle(self, k3):
        assert two_disjoint(k3) == (VertexSet.of([0]), VertexSet.of([1]))

    def test_square(self, c4):
        assert two_disjoint(c4) == (VertexSet.of([0, 2]), VertexSet.of([1, 3]))

    def test_edgeless(self):
        assert two_disjoint(empty_graph(2)) == (VertexSet.of([0, 1]), VertexSet())

    @given(graphs(max_n=12))
    @hyp_settings(max_examples=60, deadline=None)
    def test_dominating_then_isolating(self, g):
        first, second = two_disjoint(g)
        assert not first & second
        assert is_independent_dominating(g, first)
        assert is_independent_isolating(g, second)


def test_complete_isolating_keeps_seed(p4):
    assert complete_isolating(p4, VertexSet.of([3])) == VertexSet.of([0, 3])
    assert is_independent_isolating(p4, complete_isolating(p4, VertexSet()))


class TestBipartitePartition:
    def test_c6(self, c6):
        assert bipartite_partition3(c6) == (VertexSet.of([0, 3]), VertexSet.of([1, 5]), VertexSet.of([2, 4]))

    def test_root_is_least_end_vertex(self):
        # the path 2-0-1-3 has end vertices 2 and 3
        g = from_edge_list(4, [(0, 1), (0, 2), (1, 3)])
        assert bipartite_partition3(g) == (VertexSet.of([2, 3]), VertexSet.of([0]), VertexSet.of([1]))

    def test_preconditions(self, k2, c5):
        with pytest.raises(TooSmall):
            bipartite_partition3(k2)
        with pytest.raises(NotBipartite):
            bipartite_partition3(c5)
        with pytest.raises(Disconnected):
            bipartite_partition3(from_edge_list(4, [(0, 1), (2, 3)]))

    def test_certificate(self, p4):
        certificate = bipartite_bound(p4)
        assert certificate.witness == VertexSet.of([1])
        assert certificate.bound == Fraction(4, 3)
        assert certificate.verified

    @given(seeds, st.integers(min_value=3, max_value=30), st.sampled_from(["tree", "bipartite"]))
    @hyp_settings(max_examples=50, deadline=None)
    def test_random_bipartite_instances(self, seed, n, family):
        g = gen_random(make_spec(family, n=n, p=0.3), seed)
        partition = bipartite_partition3(g)
        assert verify_partition(g, list(partition), k=3)
        assert min(len(s) for s in partition) <= g.n // 3


class TestBuildSweep:
    def test_rotated_path(self, p4):
        state = build_sweep(p4, Coloring(k=3, colors=(3, 2, 1, 2)), (2, 3))
        assert state.pivot_edge == (2, 3)
        assert state.d_set == VertexSet.of([0, 1, 2])
        assert state.arcs == ((2, 1), (1, 0))

    def test_bipartite_path_stops_at_root(self, p4):
        state = build_sweep(p4, Coloring(k=3, colors=(1, 2, 1, 2)), (3, 2))
        assert state.pivot_edge == (2, 3)
        assert state.d_set == VertexSet.of([2])
        assert state.arcs == ()

    def test_rejects_edge_that_is_not_bad(self, p4):
        with pytest.raises(NotBadEdge):
            build_sweep(p4, Coloring(k=3, colors=(1, 2, 3, 1)), (0, 1))

    def test_rejects_non_edge(self, p4):
        with pytest.raises(NotBadEdge):
            build_sweep(p4, Coloring(k=3, colors=(1, 2, 1, 2)), (0, 2))

    def test_needs_three_colors(self, p4):
        with pytest.raises(WrongK):
            build_sweep(p4, Coloring(k=4, colors=(1, 2, 1, 2)), (0, 1))

    @given(
        seeds,
        st.integers(min_value=3, max_value=25),
        st.sampled_from(["tree", "bipartite", "kpartite"]),
        st.integers(min_value=0, max_value=1000),
    )
    @hyp_settings(max_examples=60, deadline=None)
    def test_edges_away_from_d_keep_their_status(self, seed, n, family, pick):
        if family == "kpartite":
            spec = make_spec(family, n=n, k=3, p=0.3)
            g = gen_random(spec, seed)
            c = spec.planted_coloring()
        else:
            g = gen_random(make_spec(family, n=n, p=0.3), seed)
            first, _ = bipartition(g)
            c = Coloring(k=3, colors=tuple(1 if v in first else 2 for v in range(g.n)))
        before = bad_edges(g, c).edge_pairs()
        assume(before)
        state = build_sweep(g, c, before[pick % len(before)])
        after = set(bad_edges(g, rotate(c, state.d_set)).edge_pairs())
        near = closed_neighborhood_mask(g, state.d_set.mask)
        for u, v in g.edges():
            if not (near >> u & 1 or near >> v & 1):
                assert ((u, v) in before) == ((u, v) in after)


def test_rotate_decrements_cyclically():
    c = rotate(Coloring(k=3, colors=(1, 2, 3, 1)), VertexSet.of([0, 1, 2]))
    assert c.colors == (3, 1, 2, 1)
    with pytest.raises(UnassignedVertex):
        rotate(Coloring(k=3, colors=(0, 1)), VertexSet.of([0]))


class TestEliminateBadEdges:
    def test_triangle_needs_no_sweep(self, k3):
        outcome = eliminate_bad_edges(k3, Coloring(k=3, colors=(1, 2, 3)))
        assert outcome.trace == ()
        assert outcome.pivot is None
        assert outcome.sets == (VertexSet.of([0]), VertexSet.of([1]), VertexSet.of([2]))

    def test_path(self, p4):
        outcome = eliminate_bad_edges(p4, Coloring(k=3, colors=(1, 2, 1, 2)))
        assert [state.pivot_edge for state in outcome.trace] == [(0, 1), (2, 3)]
        assert [state.d_set for state in outcome.trace] == [VertexSet.of([0]), VertexSet.of([0, 1, 2])]
        assert outcome.final_coloring.colors == (2, 1, 3, 2)
        assert outcome.pivot is None
        assert outcome.sets == (VertexSet.of([1]), VertexSet.of([0, 3]), VertexSet.of([2]))
        assert format_trace(outcome) == (
            "sweep 1 edge 0-1 |D|=1 bad=3->1\n"
            "sweep 2 edge 2-3 |D|=3 bad=1->0\n"
            "pivot -\n"
        )

    def test_leaf_end_is_swept_on_its_own(self, p4):
        # w = 0 is a leaf, stays outside D and flips the orientation of 0-1
        outcome = eliminate_bad_edges(p4, Coloring(k=3, colors=(2, 1, 2, 1)), checked=True)
        assert [state.pivot_edge for state in outcome.trace] == [(1, 0), (0, 1)]
        assert outcome.final_coloring.colors == (1, 3, 2, 1)
        assert outcome.pivot is None
        assert format_trace(outcome) == (
            "sweep 1 edge 1-0 |D|=1 bad=3->1\n"
            "sweep 2 edge 0-1 |D|=1 bad=1->0\n"
            "pivot -\n"
        )

    def test_hexagon(self, c6):
        outcome = eliminate_bad_edges(c6, Coloring(k=3, colors=(1, 2, 1, 2, 1, 2)))
        assert [(s.bad_before, s.bad_after) for s in outcome.trace] == [(6, 2), (2, 0)]
        assert outcome.trace[1].d_set == VertexSet.of([1, 2])
        assert outcome.final_coloring.colors == (3, 1, 3, 2, 1, 2)
        assert bad_edges(c6, outcome.final_coloring).count == 0

    def test_preconditions(self, k2, p4):
        with pytest.raises(TooSmall):
            eliminate_bad_edges(k2, Coloring(k=3, colors=(1, 2)))
        with pytest.raises(WrongK):
            eliminate_bad_edges(p4, Coloring(k=2, colors=(1, 2, 1, 2)))

    @given(seeds, st.integers(min_value=3, max_value=40), st.sampled_from([0.15, 0.3, 0.6]))
    @hyp_settings(max_examples=60, deadline=None)
    def test_random_tripartite(self, seed, n, p):
        spec = make_spec("kpartite", n=n, k=3, p=p)
        g = gen_random(spec, seed)
        outcome = eliminate_bad_edges(g, spec.planted_coloring(), checked=True)
        assert is_proper(g, outcome.final_coloring)
        remaining = bad_edges(g, outcome.final_coloring)
        if outcome.pivot is None:
            assert remaining.count == 0
        else:
            assert all(outcome.pivot in pair for pair in remaining.edge_pairs())
        assert all(is_independent_isolating(g, s) for s in outcome.sets)
        assert min(len(s) for s in outcome.sets) <= (g.n + 1) // 3


class TestTripartiteBound:
    def test_k4_is_not_3_colorable(self, k4):
        with pytest.raises(Not3Colorable):
            tripartite_bound(k4)

    def test_given_coloring_with_four_colors(self, c4):
        with pytest.raises(Not3Colorable):
            tripartite_bound(c4, Coloring(k=4, colors=(1, 2, 3, 4)))

    def test_three_labels_out_of_four_are_renumbered(self, c5):
        sparse = tripartite_bound(c5, Coloring(k=4, colors=(1, 2, 1, 2, 4)))
        dense = tripartite_bound(c5, Coloring(k=3, colors=(1, 2, 1, 2, 3)))
        assert sparse.verified
        assert sparse.witness == dense.witness
        assert sparse.partition == dense.partition

    @pytest.mark.parametrize("m", [2, 3, 4, 6])
    def test_jewel_is_tight(self, m):
        jewel, _ = gen_jewel(m)
        certificate = tripartite_bound(jewel)
        assert certificate.verified
        assert len(certificate.witness) == m
        assert certificate.bound == m


class TestKColorableBound:
    def test_complete_graph(self, k4):
        certificate = k_colorable_bound(k4)
        assert certificate.method == "grundy"
        assert certificate.witness == VertexSet.of([0])
        assert certificate.bound == Fraction(12, 7)
        stats = certificate.stats
        assert (stats.k, stats.h, stats.x) == (4, 2, 0)
        assert stats.j_sizes == {3: 1, 4: 1}
        assert verify_claim_bounds(k4, stats)

    def test_three_colors_use_the_sweep(self):
        graph, _ = gen_M(3)
        certificate = k_colorable_bound(graph)
        assert certificate.method == "sweep"
        assert certificate.verified
        assert len(certificate.witness) <= (graph.n + 1) // 3
        assert verify_claim_bounds(graph, certificate.stats)

    def test_bipartite_delegates(self, c6):
        certificate = k_colorable_bound(c6)
        assert certificate.method == "bipartite"
        assert len(certificate.witness) == 2

    def test_x_classes_chosen_by_completed_size(self):
        # A_1 ∪ A_2 is one tree on seven vertices; its smallest class {0,7}
        # leaves 9 undominated and completes to four vertices
        g = from_edge_list(10, [
            (0, 2), (0, 3), (1, 2), (1, 5), (1, 6), (1, 7), (1, 8), (2, 6), (2, 8),
            (2, 9), (3, 5), (3, 6), (4, 7), (4, 8), (5, 6), (6, 8), (8, 9),
        ])
        certificate = k_colorable_bound(g)
        stats = certificate.stats
        assert (stats.k, stats.h, stats.x) == (4, 7, 7)
        assert stats.candidate("iii").witness == VertexSet.of([1, 3, 9])
        assert is_independent_isolating(g, stats.candidate("iii").witness)
        assert len(stats.candidate("iii").witness) <= Fraction(23, 6)
        assert verify_claim_bounds(g, stats)
        assert certificate.witness == VertexSet.of([5, 8])

    @given(seeds, st.integers(min_value=8, max_value=40), st.sampled_from([4, 5]))
    @hyp_settings(max_examples=40, deadline=None)
    def test_random_kpartite(self, seed, n, k):
        g = gen_random(make_spec("kpartite", n=n, k=k, p=0.7), seed)
        certificate = k_colorable_bound(g, make_spec("kpartite", n=n, k=k).planted_coloring())
        assert certificate.verified
        assert len(certificate.witness) <= certificate.bound
        assert verify_claim_bounds(g, certificate.stats)
