from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from rolekit.graph import (
    Coloring,
    Graph,
    GraphCollection,
    GraphError,
    constant_coloring,
    disjoint_union,
    induced_subgraph,
    k_hop_neighborhood,
    label_coloring,
)
from rolekit.datasets import make_complete, make_cycle, make_figure1_pair, make_path


@st.composite
def graphs(draw, max_n: int = 8):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if pairs:
        edges = draw(st.sets(st.sampled_from(pairs)))
    else:
        edges = set()
    return Graph.from_edges(n, sorted(edges))


class TestGraphConstruction:
    def test_basic(self):
        g = Graph.from_edges(3, [(0, 1), (1, 2)])
        assert g.n == 3
        assert g.num_edges == 2
        assert g.neighbors == ((1,), (0, 2), (1,))
        assert g.degree(1) == 2

    def test_rejects_self_loop(self):
        with pytest.raises(GraphError, match="self-loop"):
            Graph.from_edges(2, [(0, 0)])

    def test_rejects_duplicate_edge(self):
        with pytest.raises(GraphError, match="duplicate"):
            Graph.from_edges(2, [(0, 1), (1, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(GraphError, match="out of range"):
            Graph.from_edges(2, [(0, 2)])

    def test_rejects_bad_label_count(self):
        with pytest.raises(GraphError):
            Graph.from_edges(2, [], node_labels=[1])

    def test_empty_graph(self):
        g = Graph.from_edges(0, [])
        assert g.n == 0
        assert g.edge_list() == []

    @given(graphs())
    def test_edge_list_round_trip(self, g):
        rebuilt = Graph.from_edges(g.n, g.edge_list())
        assert rebuilt == g

    @given(graphs())
    def test_neighbor_lists_sorted_and_symmetric(self, g):
        for u in range(g.n):
            nb = g.neighbors[u]
            assert list(nb) == sorted(nb)
            assert len(set(nb)) == len(nb)
            for v in nb:
                assert u in g.neighbors[v]


class TestKHopNeighborhood:
    def test_zero_steps(self):
        assert k_hop_neighborhood(make_cycle(6), 0, 0) == {0}

    def test_cycle_two_steps(self):
        # two neighbors plus their neighbors
        assert k_hop_neighborhood(make_cycle(6), 0, 2) == {0, 1, 2, 4, 5}

    def test_bounded_by_component(self):
        _, triangles = make_figure1_pair()
        assert k_hop_neighborhood(triangles, 0, 10) == {0, 3, 4}

    def test_bad_node(self):
        with pytest.raises(GraphError):
            k_hop_neighborhood(make_cycle(3), 3, 1)

    @given(graphs(), st.integers(0, 5))
    def test_monotone_in_k(self, g, k):
        for v in range(g.n):
            assert k_hop_neighborhood(g, v, k) <= k_hop_neighborhood(g, v, k + 1)


class TestInducedSubgraph:
    def test_identity(self):
        g = make_cycle(6)
        assert induced_subgraph(g, range(6)) == g

    def test_cycle_segment_is_path(self):
        assert induced_subgraph(make_cycle(6), {0, 1, 2}) == make_path(3)

    def test_complete_pair_is_edge(self):
        sub = induced_subgraph(make_complete(3), {0, 1})
        assert sub.edge_list() == [(0, 1)]

    def test_keeps_labels(self):
        g = Graph.from_edges(3, [(0, 1)], node_labels=[7, 8, 9])
        assert induced_subgraph(g, {1, 2}).node_labels == (8, 9)

    @given(graphs(), st.integers(0, 3))
    def test_ball_keeps_all_near_edges(self, g, k):
        for v in range(g.n):
            ball = sorted(k_hop_neighborhood(g, v, k))
            index = {x: i for i, x in enumerate(ball)}
            sub = induced_subgraph(g, ball)
            expected = sorted(
                (index[a], index[b])
                for a, b in g.edge_list()
                if a in index and b in index
            )
            assert sub.edge_list() == expected


class TestDisjointUnion:
    def test_singleton(self):
        g = make_cycle(6)
        assert disjoint_union([g]) == g

    def test_two_triangles(self):
        g = disjoint_union([make_complete(3), make_complete(3)])
        assert g.n == 6
        assert g.num_edges == 6
        assert k_hop_neighborhood(g, 0, 10) == {0, 1, 2}

    def test_empty_is_neutral(self):
        empty = Graph.from_edges(0, [])
        assert disjoint_union([empty, make_complete(3)]) == make_complete(3)

    def test_concatenates_labels(self):
        a = Graph.from_edges(1, [], node_labels=[3])
        b = Graph.from_edges(2, [(0, 1)], node_labels=[4, 5])
        assert disjoint_union([a, b]).node_labels == (3, 4, 5)

    def test_drops_labels_when_partial(self):
        a = Graph.from_edges(1, [], node_labels=[3])
        b = Graph.from_edges(1, [])
        assert disjoint_union([a, b]).node_labels is None


class TestColoring:
    def test_constant(self):
        c = constant_coloring(make_cycle(6))
        assert c.colors == (0,) * 6
        assert c.num_classes == 1

    def test_constant_empty(self):
        c = constant_coloring(Graph.from_edges(0, []))
        assert c.num_classes == 0

    def test_constant_on_union(self):
        union = disjoint_union([make_complete(3), make_cycle(6)])
        assert constant_coloring(union).colors == (0,) * 9

    def test_from_labels_canonicalizes(self):
        c = Coloring.from_labels(["b", "a", "b", "c"])
        assert c.colors == (0, 1, 0, 2)
        assert c.num_classes == 3

    def test_rejects_non_canonical(self):
        with pytest.raises(ValueError, match="canonical"):
            Coloring((1, 0), 2)

    def test_rejects_wrong_class_count(self):
        with pytest.raises(ValueError):
            Coloring((0, 0), 2)

    def test_classes(self):
        assert Coloring((0, 1, 0), 2).classes() == [[0, 2], [1]]

    def test_label_coloring(self):
        g = Graph.from_edges(3, [], node_labels=[9, 3, 9])
        assert label_coloring(g).colors == (0, 1, 0)
        with pytest.raises(GraphError):
            label_coloring(make_cycle(3))


class TestGraphCollection:
    def test_indexing(self):
        coll = GraphCollection((make_complete(3), make_path(2)))
        assert coll.num_graphs == 2
        assert coll.total_nodes == 5
        assert coll.offsets == (0, 3, 5)
        assert coll.global_index(1, 0) == 3
        assert coll.locate(4) == (1, 1)
        with pytest.raises(GraphError):
            coll.locate(5)
        with pytest.raises(GraphError):
            coll.global_index(1, 2)

    def test_union_matches_disjoint_union(self):
        graphs = (make_complete(3), make_cycle(4))
        assert GraphCollection(graphs).union() == disjoint_union(graphs)

    def test_node_labels_flat(self):
        a = Graph.from_edges(1, [], node_labels=[3])
        b = Graph.from_edges(2, [(0, 1)], node_labels=[4, 5])
        assert GraphCollection((a, b)).node_labels_flat() == (3, 4, 5)
        assert GraphCollection((a, make_path(2))).node_labels_flat() is None

    def test_label_count_mismatch(self):
        with pytest.raises(GraphError):
            GraphCollection((make_path(2),), graph_labels=(0, 1))
