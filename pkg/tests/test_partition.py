from __future__ import annotations

from collections import Counter

import pytest
from hypothesis import given, strategies as st

from rolekit.graph import Coloring
from rolekit.partition import class_sizes, equivalent, meet, num_classes, refines


def coloring(*labels) -> Coloring:
    return Coloring.from_labels(labels)


@st.composite
def coloring_pairs(draw, max_n: int = 8, max_colors: int = 4):
    n = draw(st.integers(min_value=1, max_value=max_n))
    label_lists = st.lists(
        st.integers(0, max_colors - 1), min_size=n, max_size=n
    )
    return tuple(Coloring.from_labels(draw(label_lists)) for _ in range(3))


class TestRefines:
    def test_singletons_refine_everything(self):
        singles = coloring(0, 1, 2)
        assert refines(singles, coloring(0, 0, 1))
        assert refines(singles, coloring(0, 0, 0))

    def test_everything_refines_constant(self):
        assert refines(coloring(0, 1, 0, 2), coloring(0, 0, 0, 0))

    def test_strict_example(self):
        finer = coloring(0, 1, 2)
        coarser = coloring(0, 0, 1)
        assert refines(finer, coarser)
        assert not refines(coarser, finer)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            refines(coloring(0), coloring(0, 1))


class TestEquivalent:
    def test_reflexive(self):
        c = coloring(0, 1, 1)
        assert equivalent(c, c)

    def test_ids_immaterial(self):
        assert equivalent(coloring("a", "b", "a"), coloring("z", "q", "z"))

    def test_different_partitions(self):
        assert not equivalent(coloring(0, 0, 1), coloring(0, 1, 1))

    @given(coloring_pairs())
    def test_equivalent_iff_identical_canonical(self, cs):
        a, b, _ = cs
        assert equivalent(a, b) == (a.colors == b.colors)


class TestSizes:
    def test_constant(self):
        assert class_sizes(coloring(0, 0, 0, 0, 0, 0)) == Counter({6: 1})
        assert num_classes(coloring(0, 0, 0)) == 1

    def test_singletons(self):
        assert class_sizes(coloring(0, 1, 2)) == Counter({1: 3})
        assert num_classes(coloring(0, 1, 2)) == 3

    def test_degree_partition_of_path(self):
        assert class_sizes(coloring(0, 1, 0)) == Counter({2: 1, 1: 1})


class TestLatticeProperties:
    @given(coloring_pairs())
    def test_reflexive(self, cs):
        a, _, _ = cs
        assert refines(a, a)

    @given(coloring_pairs())
    def test_antisymmetric_up_to_equivalence(self, cs):
        a, b, _ = cs
        if refines(a, b) and refines(b, a):
            assert equivalent(a, b)

    @given(coloring_pairs())
    def test_transitive(self, cs):
        a, b, c = cs
        if refines(a, b) and refines(b, c):
            assert refines(a, c)

    @given(coloring_pairs())
    def test_meet_refines_both(self, cs):
        a, b, _ = cs
        m = meet(a, b)
        assert refines(m, a)
        assert refines(m, b)

    @given(coloring_pairs())
    def test_meet_is_coarsest_common_refinement(self, cs):
        a, b, c = cs
        if refines(c, a) and refines(c, b):
            assert refines(c, meet(a, b))
