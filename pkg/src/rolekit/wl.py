"""Color refinement (1-WL) and depth-d WL roles.

One refinement step recolors every node by the pair (own color, sorted
multiset of neighbor colors).  The injective "hash" the update rule needs is
realized as a dictionary from signature to a fresh dense id assigned in
first-occurrence order over ascending node index, so collisions are
impossible and runs are deterministic.

`refine_step` is the reference implementation of one step.  Whole-trace
computations switch to a vectorized equivalent (bulk neighbor-color sort
over a CSR view) once graphs are large and degrees bounded; both routes
produce identical canonical colorings and are cross-checked in the tests.

Depth-d roles over a whole dataset are computed on the disjoint union of its
graphs, which makes color ids comparable across graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .graph import Coloring, Graph, GraphCollection, constant_coloring

_VECTORIZE_MIN_NODES = 2048
_VECTORIZE_MAX_DEGREE = 128


def _signature(color: int, neighbor_colors: tuple[int, ...]):
    # split out so tests can inject a non-injective variant
    return (color, neighbor_colors)


def refine_step(g: Graph, c: Coloring) -> Coloring:
    """One color-refinement step; output ids are canonical."""
    if len(c.colors) != g.n:
        raise ValueError(f"coloring covers {len(c.colors)} nodes, graph has {g.n}")
    colors = c.colors
    signature = _signature
    table: dict = {}
    out = []
    for v, nb in enumerate(g.neighbors):
        sig = signature(colors[v], tuple(sorted(colors[u] for u in nb)))
        nid = table.get(sig)
        if nid is None:
            nid = len(table)
            table[sig] = nid
        out.append(nid)
    return Coloring(tuple(out), len(table))


class _CsrView:
    """Flat adjacency arrays for the vectorized refinement path."""

    def __init__(self, g: Graph) -> None:
        degrees = np.fromiter((len(nb) for nb in g.neighbors), dtype=np.int64, count=g.n)
        self.indptr = np.concatenate([[0], np.cumsum(degrees)])
        total = int(self.indptr[-1])
        self.indices = np.fromiter(
            (w for nb in g.neighbors for w in nb), dtype=np.int64, count=total
        )
        self.rows = np.repeat(np.arange(g.n, dtype=np.int64), degrees)
        self.starts = np.repeat(self.indptr[:-1], degrees)
        self.max_degree = int(degrees.max()) if g.n else 0


def _refine_colors_vectorized(csr: _CsrView, colors: np.ndarray) -> tuple[np.ndarray, int]:
    """One refinement step on a color array; same canonical ids as
    refine_step with the default signature."""
    n = len(colors)
    neighbor_colors = colors[csr.indices]
    # sort neighbor colors within each node segment
    order = np.lexsort((neighbor_colors, csr.rows))
    positions = np.arange(len(csr.indices), dtype=np.int64) - csr.starts
    signatures = np.full((n, csr.max_degree + 1), -1, dtype=np.int64)
    signatures[:, 0] = colors
    signatures[csr.rows, 1 + positions] = neighbor_colors[order]
    # group identical signature rows, then renumber groups by first occurrence
    perm = np.lexsort(signatures.T[::-1])
    ordered = signatures[perm]
    boundary = np.empty(n, dtype=bool)
    boundary[0] = True
    np.any(ordered[1:] != ordered[:-1], axis=1, out=boundary[1:])
    group = np.empty(n, dtype=np.int64)
    group[perm] = np.cumsum(boundary) - 1
    num_classes = int(group.max()) + 1
    first_seen = np.full(num_classes, n, dtype=np.int64)
    np.minimum.at(first_seen, group, np.arange(n, dtype=np.int64))
    canonical = np.empty(num_classes, dtype=np.int64)
    canonical[np.argsort(first_seen, kind="stable")] = np.arange(
        num_classes, dtype=np.int64
    )
    return canonical[group], num_classes


def _vectorize(g: Graph) -> bool:
    if g.n < _VECTORIZE_MIN_NODES:
        return False
    return max(map(len, g.neighbors), default=0) <= _VECTORIZE_MAX_DEGREE


def _run_refinement(
    g: Graph, c0: Coloring, depth: int | None
) -> tuple[list[Coloring], int | None]:
    """Refine from c0 for `depth` steps, or until stable when depth is None.
    After stabilization the trace repeats the stable coloring."""
    colorings = [c0]
    stabilized_at: int | None = None
    limit = depth if depth is not None else g.n + 1
    if _vectorize(g):
        csr = _CsrView(g)
        colors = np.fromiter(c0.colors, dtype=np.int64, count=g.n)
        for t in range(1, limit + 1):
            if stabilized_at is not None:
                colorings.append(colorings[-1])
                continue
            new_colors, num_classes = _refine_colors_vectorized(csr, colors)
            if np.array_equal(new_colors, colors):
                stabilized_at = t
                colorings.append(colorings[-1])
                if depth is None:
                    break
            else:
                colorings.append(Coloring(tuple(new_colors.tolist()), num_classes))
                colors = new_colors
    else:
        for t in range(1, limit + 1):
            if stabilized_at is not None:
                colorings.append(colorings[-1])
                continue
            nxt = refine_step(g, colorings[-1])
            if nxt.colors == colorings[-1].colors:
                stabilized_at = t
                colorings.append(colorings[-1])
                if depth is None:
                    break
            else:
                colorings.append(nxt)
    if depth is None and stabilized_at is None:
        raise AssertionError("refinement failed to stabilize within n steps")
    return colorings, stabilized_at


@dataclass(frozen=True)
class RefinementTrace:
    """Colorings c^0..c^d of a refinement run.

    stabilized_at is the first t >= 1 with c^t equivalent to c^(t-1), or None
    if that never happened within the trace.  Entries after stabilization
    repeat the stable coloring, so every depth is a total function of d.
    """

    colorings: tuple[Coloring, ...]
    stabilized_at: int | None

    @property
    def depth(self) -> int:
        return len(self.colorings) - 1

    def __getitem__(self, t: int) -> Coloring:
        return self.colorings[t]


def wl_roles(
    g_or_collection: Union[Graph, GraphCollection],
    d: int,
    initial: Coloring | None = None,
) -> RefinementTrace:
    """Run d refinement steps from the constant coloring (or an explicit
    initial coloring, e.g. one seeded from node labels).

    For a GraphCollection the refinement runs on the disjoint union, so the
    coloring at each depth assigns dataset-wide comparable role ids indexed
    by global node index.
    """
    if d < 0:
        raise ValueError(f"depth must be nonnegative, got {d}")
    g = (
        g_or_collection.union()
        if isinstance(g_or_collection, GraphCollection)
        else g_or_collection
    )
    c = constant_coloring(g) if initial is None else initial
    if len(c.colors) != g.n:
        raise ValueError(f"initial coloring covers {len(c.colors)} nodes, need {g.n}")
    colorings, stabilized_at = _run_refinement(g, c, d)
    return RefinementTrace(tuple(colorings), stabilized_at)


def stable_coloring(
    g: Graph, initial: Coloring | None = None
) -> tuple[Coloring, int]:
    """Refine until c^(t+1) is equivalent to c^t; returns (stable coloring, t).

    Terminates within n steps because the class count strictly increases
    until the fixpoint.
    """
    c = constant_coloring(g) if initial is None else initial
    if len(c.colors) != g.n:
        raise ValueError(f"initial coloring covers {len(c.colors)} nodes, need {g.n}")
    colorings, stabilized_at = _run_refinement(g, c, None)
    assert stabilized_at is not None
    return colorings[-1], stabilized_at
