"""Immutable undirected simple graphs, colorings and graph collections.

All node indices are 0-based. Graphs are frozen after construction and every
operation returns a new value, so everything in here is safe to share across
threads.
"""

from __future__ import annotations

from bisect import bisect_right
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Invalid graph construction or node index out of range."""


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph in compressed adjacency form.

    `neighbors[v]` is the ascending tuple of nodes adjacent to v.  Self-loops
    and duplicate edges are rejected at construction, not silently dropped:
    the role definitions assume simple graphs and silent mutation would hide
    data problems.
    """

    neighbors: tuple[tuple[int, ...], ...]
    node_labels: tuple[int, ...] | None = None
    node_attributes: tuple[tuple[float, ...], ...] | None = None

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        node_labels: Sequence[int] | None = None,
        node_attributes: Sequence[Sequence[float]] | None = None,
    ) -> "Graph":
        """Build a graph on nodes 0..n-1 from an undirected edge list."""
        if n < 0:
            raise GraphError(f"node count must be nonnegative, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for {n} nodes")
            if u == v:
                raise GraphError(f"self-loop at node {u} not allowed")
            if v in adj[u]:
                raise GraphError(f"duplicate edge ({u},{v})")
            adj[u].add(v)
            adj[v].add(u)
        labels = None
        if node_labels is not None:
            labels = tuple(int(x) for x in node_labels)
            if len(labels) != n:
                raise GraphError(f"expected {n} node labels, got {len(labels)}")
        attrs = None
        if node_attributes is not None:
            attrs = tuple(tuple(float(x) for x in row) for row in node_attributes)
            if len(attrs) != n:
                raise GraphError(f"expected {n} attribute rows, got {len(attrs)}")
        return cls(tuple(tuple(sorted(s)) for s in adj), labels, attrs)

    @property
    def n(self) -> int:
        return len(self.neighbors)

    @property
    def num_edges(self) -> int:
        return sum(len(nb) for nb in self.neighbors) // 2

    def degree(self, v: int) -> int:
        self._check_node(v)
        return len(self.neighbors[v])

    def edge_list(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted."""
        return [(u, v) for u in range(self.n) for v in self.neighbors[u] if u < v]

    def _check_node(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"node {v} out of range for graph with {self.n} nodes")

    def __repr__(self) -> str:  # the dataclass default is unreadable for big graphs
        return f"Graph(n={self.n}, m={self.num_edges})"


@dataclass(frozen=True)
class Coloring:
    """Map node -> dense color id 0..num_classes-1.

    Ids are canonical: assigned in first-occurrence order when scanning nodes
    in ascending index order.  Two structurally identical computations
    therefore produce identical arrays, and partition equality is plain
    array equality.
    """

    colors: tuple[int, ...]
    num_classes: int

    def __post_init__(self) -> None:
        seen = 0
        for c in self.colors:
            if c == seen:
                seen += 1
            elif not 0 <= c < seen:
                raise ValueError(
                    f"coloring not canonical: color {c} appears before all of 0..{c - 1}"
                )
        if seen != self.num_classes:
            raise ValueError(f"num_classes={self.num_classes} but {seen} colors occur")

    @classmethod
    def from_labels(cls, labels: Iterable) -> "Coloring":
        """Canonicalize arbitrary hashable labels into dense first-occurrence ids."""
        table: dict = {}
        colors = []
        for lab in labels:
            cid = table.get(lab)
            if cid is None:
                cid = len(table)
                table[lab] = cid
            colors.append(cid)
        return cls(tuple(colors), len(table))

    def __len__(self) -> int:
        return len(self.colors)

    def classes(self) -> list[list[int]]:
        """Node lists per color id, in color-id order."""
        out: list[list[int]] = [[] for _ in range(self.num_classes)]
        for v, c in enumerate(self.colors):
            out[c].append(v)
        return out

    def __repr__(self) -> str:
        return f"Coloring(n={len(self.colors)}, classes={self.num_classes})"


@dataclass(frozen=True)
class GraphCollection:
    """Ordered dataset of graphs with optional per-graph labels.

    Nodes get contiguous global indices in the disjoint union, partitioned by
    graph in order: global index = offsets[graph_id] + local index.
    """

    graphs: tuple[Graph, ...]
    graph_labels: tuple[int, ...] | None = None
    offsets: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.graph_labels is not None and len(self.graph_labels) != len(self.graphs):
            raise GraphError(
                f"{len(self.graphs)} graphs but {len(self.graph_labels)} graph labels"
            )
        offs = [0]
        for g in self.graphs:
            offs.append(offs[-1] + g.n)
        object.__setattr__(self, "offsets", tuple(offs))

    @classmethod
    def from_graphs(
        cls, graphs: Iterable[Graph], graph_labels: Sequence[int] | None = None
    ) -> "GraphCollection":
        labels = tuple(int(x) for x in graph_labels) if graph_labels is not None else None
        return cls(tuple(graphs), labels)

    @property
    def num_graphs(self) -> int:
        return len(self.graphs)

    @property
    def total_nodes(self) -> int:
        return self.offsets[-1]

    def global_index(self, graph_id: int, local: int) -> int:
        if not 0 <= graph_id < self.num_graphs:
            raise GraphError(f"graph id {graph_id} out of range")
        self.graphs[graph_id]._check_node(local)
        return self.offsets[graph_id] + local

    def locate(self, global_index: int) -> tuple[int, int]:
        """Inverse of global_index: global node index -> (graph_id, local)."""
        if not 0 <= global_index < self.total_nodes:
            raise GraphError(f"global node index {global_index} out of range")
        gid = bisect_right(self.offsets, global_index) - 1
        return gid, global_index - self.offsets[gid]

    def union(self) -> Graph:
        """Disjoint union of all member graphs, in collection order."""
        return disjoint_union(self.graphs)

    def node_labels_flat(self) -> tuple[int, ...] | None:
        """Per-node labels in global node order, or None if any graph lacks them."""
        if any(g.node_labels is None for g in self.graphs):
            return None
        out: list[int] = []
        for g in self.graphs:
            out.extend(g.node_labels)  # type: ignore[arg-type]
        return tuple(out)

    def __len__(self) -> int:
        return len(self.graphs)

    def __repr__(self) -> str:
        return f"GraphCollection(graphs={self.num_graphs}, nodes={self.total_nodes})"


def k_hop_neighborhood(g: Graph, v: int, k: int) -> frozenset[int]:
    """Nodes reachable from v in at most k steps, including v itself."""
    g._check_node(v)
    if k < 0:
        raise GraphError(f"k must be nonnegative, got {k}")
    seen = {v}
    frontier = deque([v])
    for _ in range(k):
        if not frontier:
            break
        next_frontier: deque[int] = deque()
        while frontier:
            u = frontier.popleft()
            for w in g.neighbors[u]:
                if w not in seen:
                    seen.add(w)
                    next_frontier.append(w)
        frontier = next_frontier
    return frozenset(seen)


def induced_subgraph(g: Graph, nodes: Iterable[int]) -> Graph:
    """Subgraph induced by `nodes`, relabeled to 0..|nodes|-1 in ascending order."""
    keep = sorted(set(nodes))
    for v in keep:
        g._check_node(v)
    index = {v: i for i, v in enumerate(keep)}
    adj = tuple(
        tuple(index[w] for w in g.neighbors[v] if w in index) for v in keep
    )
    labels = tuple(g.node_labels[v] for v in keep) if g.node_labels is not None else None
    attrs = (
        tuple(g.node_attributes[v] for v in keep)
        if g.node_attributes is not None
        else None
    )
    return Graph(adj, labels, attrs)


def disjoint_union(gs: Iterable[Graph]) -> Graph:
    """Disjoint union; node indices of each graph are offset by the sizes before it."""
    gs = list(gs)
    adj: list[tuple[int, ...]] = []
    offset = 0
    for g in gs:
        for nb in g.neighbors:
            adj.append(tuple(w + offset for w in nb))
        offset += g.n
    labels = None
    if gs and all(g.node_labels is not None for g in gs):
        labels = tuple(lab for g in gs for lab in g.node_labels)  # type: ignore[union-attr]
    attrs = None
    if gs and all(g.node_attributes is not None for g in gs):
        attrs = tuple(row for g in gs for row in g.node_attributes)  # type: ignore[union-attr]
    return Graph(tuple(adj), labels, attrs)


def constant_coloring(g: Graph) -> Coloring:
    """All nodes get color 0 (the empty graph gets an empty, 0-class coloring)."""
    if g.n == 0:
        return Coloring((), 0)
    return Coloring((0,) * g.n, 1)


def label_coloring(g: Graph) -> Coloring:
    """Canonical coloring seeded from node labels (explicit opt-in; roles
    elsewhere start from the constant coloring)."""
    if g.node_labels is None:
        raise GraphError("graph has no node labels")
    return Coloring.from_labels(g.node_labels)
