from __future__ import annotations

import io
import random

import pytest

from rolekit.datasets import gnp_random_graph, make_figure1_pair
from rolekit.exact import SizeLimitExceeded, exact_roles
from rolekit.graph import Coloring, Graph, GraphCollection
from rolekit.metrics import (
    DepthSweepRow,
    depth_sweep,
    majority_accuracy,
    majority_correct,
    overlap_score,
    read_sweep_csv,
    roles_union_coloring,
    write_sweep_csv,
)
from rolekit.snp import snp_roles
from rolekit.wl import wl_roles


def coloring(*labels) -> Coloring:
    return Coloring.from_labels(labels)


def labeled_collection(seed: int, graphs: int = 8, max_n: int = 7) -> GraphCollection:
    rng = random.Random(seed)
    out = []
    for _ in range(graphs):
        g = gnp_random_graph(rng.randint(1, max_n), rng.choice([0.3, 0.6]), rng)
        labels = [rng.randint(0, 2) for _ in range(g.n)]
        out.append(Graph.from_edges(g.n, g.edge_list(), node_labels=labels))
    return GraphCollection(tuple(out))


class TestMajorityAccuracy:
    def test_all_distinct_roles(self):
        assert majority_accuracy(coloring(0, 1, 2), [5, 5, 7]) == 1.0

    def test_single_role(self):
        assert majority_accuracy(coloring(0, 0, 0, 0, 0), [2, 2, 2, 1, 1]) == 0.6

    def test_two_classes_hand_counted(self):
        # class A = {l1, l1, l2}, class B = {l2, l2}: (2 + 2) / 5
        roles = coloring("A", "A", "A", "B", "B")
        labels = [1, 1, 2, 2, 2]
        assert majority_correct(roles, labels) == 4
        assert majority_accuracy(roles, labels) == pytest.approx(0.8)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            majority_accuracy(coloring(0, 1), [1])

    def test_empty(self):
        with pytest.raises(ValueError):
            majority_accuracy(Coloring((), 0), [])


class TestOverlapScore:
    def test_no_improvement(self):
        # a == b gives 0
        assert overlap_score(coloring(0, 0, 0, 0, 0), [2, 2, 2, 1, 1], 0.6) == 0.0

    def test_perfect_assignment(self):
        assert overlap_score(coloring(0, 1, 2), [5, 6, 6], 0.5) == pytest.approx(1.0)

    def test_hand_computed(self):
        roles = coloring("A", "A", "A", "B", "B")
        labels = [1, 1, 2, 2, 2]
        assert overlap_score(roles, labels, 0.6) == pytest.approx(0.5)

    def test_degenerate_baseline(self):
        assert overlap_score(coloring(0, 1), [3, 3], 1.0) is None

    def test_bad_baseline(self):
        with pytest.raises(ValueError):
            overlap_score(coloring(0), [1], 1.5)
        with pytest.raises(ValueError):
            overlap_score(coloring(0), [1], -0.1)


class TestDepthSweep:
    def test_depth_zero_overlap_is_zero(self):
        coll = labeled_collection(0)
        for method in ("wl", "snp"):
            rows = depth_sweep(coll, method, 0)
            assert rows[0].overlap == 0.0
            assert rows[0].num_roles == 1

    def test_methods_validated(self):
        with pytest.raises(ValueError):
            depth_sweep(labeled_collection(1), "bogus", 2)
        with pytest.raises(ValueError):
            depth_sweep(labeled_collection(1), "wl", -1)

    def test_monotone_columns(self):
        coll = labeled_collection(2)
        for method in ("wl", "snp"):
            rows = depth_sweep(coll, method, 4)
            for a, b in zip(rows, rows[1:]):
                assert b.num_roles >= a.num_roles
                assert b.roles_per_node >= a.roles_per_node
                assert b.overlap >= a.overlap

    def test_roles_per_node(self):
        coll = labeled_collection(3)
        rows = depth_sweep(coll, "wl", 3)
        for row in rows:
            assert row.roles_per_node == pytest.approx(
                row.num_roles / coll.total_nodes
            )
            assert 0 < row.roles_per_node <= 1

    def test_exact_method_and_guard(self):
        hexagon, triangles = make_figure1_pair()
        coll = GraphCollection((hexagon, triangles))
        rows = depth_sweep(coll, "exact", 2)
        assert [r.num_roles for r in rows] == [1, 1, 2]
        big = GraphCollection(tuple(gnp_random_graph(10, 0.3, random.Random(5)) for _ in range(5)))
        with pytest.raises(SizeLimitExceeded):
            depth_sweep(big, "exact", 1)

    def test_no_labels_gives_undefined_overlap(self):
        hexagon, triangles = make_figure1_pair()
        rows = depth_sweep(GraphCollection((hexagon, triangles)), "wl", 2)
        assert all(row.overlap is None for row in rows)

    def test_all_same_label_gives_undefined_overlap(self):
        g = Graph.from_edges(3, [(0, 1), (1, 2)], node_labels=[1, 1, 1])
        rows = depth_sweep(GraphCollection((g,)), "wl", 2)
        assert all(row.overlap is None for row in rows)

    def test_wl_rows_match_trace(self):
        coll = labeled_collection(4)
        rows = depth_sweep(coll, "wl", 3)
        trace = wl_roles(coll, 3)
        assert [r.num_roles for r in rows] == [c.num_classes for c in trace.colorings]

    def test_empty_collection_rejected(self):
        with pytest.raises(ValueError):
            depth_sweep(GraphCollection(()), "wl", 1)


class TestRolesUnionColoring:
    def test_matches_direct_methods(self):
        coll = labeled_collection(6)
        assert roles_union_coloring(coll, "wl", 2) == wl_roles(coll, 2)[2]
        assert roles_union_coloring(coll, "snp", 2) == snp_roles(coll, 2)
        small = GraphCollection(coll.graphs[:2])
        assert roles_union_coloring(small, "exact", 2) == exact_roles(small.union(), 2)


class TestSweepCsv:
    def test_round_trip(self):
        rows = [
            DepthSweepRow(0, "wl", 1, 0.125, 0.0),
            DepthSweepRow(1, "wl", 3, 0.375, 0.5),
            DepthSweepRow(2, "wl", 5, 0.625, None),
        ]
        buf = io.StringIO()
        write_sweep_csv(rows, "TOY", buf)
        text = buf.getvalue()
        assert text.splitlines()[0] == "dataset,method,depth,num_roles,roles_per_node,overlap"
        assert "NA" in text.splitlines()[3]
        parsed = read_sweep_csv(io.StringIO(text))
        assert [name for name, _ in parsed] == ["TOY"] * 3
        assert [r for _, r in parsed] == rows

    def test_six_decimal_fixed_point(self):
        rows = [DepthSweepRow(0, "snp", 1, 1 / 3, 2 / 3)]
        buf = io.StringIO()
        write_sweep_csv(rows, "X", buf)
        assert buf.getvalue().splitlines()[1] == "X,snp,0,1,0.333333,0.666667"

    def test_rejects_bad_header(self):
        with pytest.raises(ValueError):
            read_sweep_csv(io.StringIO("nope\n"))
