"""Partition-lattice operations on colorings.

A coloring c refines c' (written c ⊑ c') when every class of c lies inside a
class of c'.  Because Coloring ids are canonical, two colorings are
equivalent exactly when their arrays are equal; `equivalent` still checks
the two-sided refinement definition directly.
"""

from __future__ import annotations

from collections import Counter

from .graph import Coloring


def _check_same_length(c: Coloring, c_prime: Coloring) -> None:
    if len(c) != len(c_prime):
        raise ValueError(f"colorings cover {len(c)} vs {len(c_prime)} nodes")


def refines(c: Coloring, c_prime: Coloring) -> bool:
    """True iff every class of c is contained in a class of c_prime."""
    _check_same_length(c, c_prime)
    image: list[int] = [-1] * c.num_classes
    for a, b in zip(c.colors, c_prime.colors):
        if image[a] == -1:
            image[a] = b
        elif image[a] != b:
            return False
    return True


def equivalent(c: Coloring, c_prime: Coloring) -> bool:
    """True iff c and c_prime induce the same partition (refine each other)."""
    return refines(c, c_prime) and refines(c_prime, c)


def class_sizes(c: Coloring) -> Counter:
    """Multiset of class sizes."""
    sizes = [0] * c.num_classes
    for col in c.colors:
        sizes[col] += 1
    return Counter(sizes)


def num_classes(c: Coloring) -> int:
    return c.num_classes


def meet(c: Coloring, c_prime: Coloring) -> Coloring:
    """Coarsest partition refining both: classes are the nonempty pairwise
    intersections, with canonical ids."""
    _check_same_length(c, c_prime)
    return Coloring.from_labels(zip(c.colors, c_prime.colors))
