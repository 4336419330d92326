"""TUDataset-format parsing/emission and synthetic graph generators.

The TUDataset text layout: `<prefix>_A.txt` holds comma-separated 1-based
node-id pairs, one edge direction per line (both directions must be present);
`<prefix>_graph_indicator.txt` holds one 1-based graph id per node line.
Optional: `<prefix>_node_labels.txt`, `<prefix>_graph_labels.txt`,
`<prefix>_node_attributes.txt`.  `<prefix>_edge_labels.txt` is ignored.

Node and graph ids are 1-based only in the files; everything returned is
0-based.
"""

from __future__ import annotations

import random
from pathlib import Path
from typing import Iterable

from .graph import Graph, GraphCollection, GraphError


class DatasetFormatError(ValueError):
    """Missing file, malformed line or inconsistent TUDataset content."""


def _read_lines(path: Path) -> list[str]:
    try:
        text = path.read_text()
    except FileNotFoundError:
        raise DatasetFormatError(f"required dataset file missing: {path}") from None
    return text.splitlines()


def _parse_int(token: str, path: Path, lineno: int) -> int:
    try:
        return int(token.strip())
    except ValueError:
        raise DatasetFormatError(
            f"{path}:{lineno}: expected integer, got {token.strip()!r}"
        ) from None


def load_tudataset(directory: str | Path, prefix: str) -> GraphCollection:
    """Load a TUDataset-format graph collection from `directory`.

    The adjacency file must list every undirected edge in both directions;
    self-loop rows, duplicate rows, one-directional edges and gaps in the
    graph-indicator numbering are all reported as errors.
    """
    directory = Path(directory)
    ind_path = directory / f"{prefix}_graph_indicator.txt"
    adj_path = directory / f"{prefix}_A.txt"

    indicator = []
    for i, line in enumerate(_read_lines(ind_path), start=1):
        if not line.strip():
            continue
        indicator.append(_parse_int(line, ind_path, i))
    if not indicator:
        raise DatasetFormatError(f"{ind_path}: no nodes")

    num_graphs = indicator[-1]
    prev = 1
    if indicator[0] != 1:
        raise DatasetFormatError(f"{ind_path}: graph ids must start at 1")
    for i, gid in enumerate(indicator, start=1):
        if gid < prev or gid > prev + 1:
            raise DatasetFormatError(
                f"{ind_path}:{i}: graph id {gid} after {prev}; ids must be "
                "contiguous and grouped by graph"
            )
        prev = gid
    n_total = len(indicator)

    # per-graph node ranges (0-based global)
    counts = [0] * num_graphs
    for gid in indicator:
        counts[gid - 1] += 1
    offsets = [0]
    for c in counts:
        offsets.append(offsets[-1] + c)

    directed: set[tuple[int, int]] = set()
    for i, line in enumerate(_read_lines(adj_path), start=1):
        if not line.strip():
            continue
        parts = line.split(",")
        if len(parts) != 2:
            raise DatasetFormatError(f"{adj_path}:{i}: expected 'u, v', got {line!r}")
        u = _parse_int(parts[0], adj_path, i)
        v = _parse_int(parts[1], adj_path, i)
        if not (1 <= u <= n_total and 1 <= v <= n_total):
            raise DatasetFormatError(
                f"{adj_path}:{i}: node id out of range 1..{n_total}"
            )
        if u == v:
            raise DatasetFormatError(f"{adj_path}:{i}: self-loop at node {u}")
        if (u, v) in directed:
            raise DatasetFormatError(f"{adj_path}:{i}: duplicate edge row ({u}, {v})")
        if indicator[u - 1] != indicator[v - 1]:
            raise DatasetFormatError(
                f"{adj_path}:{i}: edge ({u}, {v}) crosses graphs "
                f"{indicator[u - 1]} and {indicator[v - 1]}"
            )
        directed.add((u, v))
    for u, v in directed:
        if (v, u) not in directed:
            raise DatasetFormatError(
                f"{adj_path}: edge ({u}, {v}) listed in one direction only"
            )

    node_labels = _load_per_node_ints(directory / f"{prefix}_node_labels.txt", n_total)
    node_attrs = _load_node_attributes(
        directory / f"{prefix}_node_attributes.txt", n_total
    )
    graph_labels = _load_per_node_ints(
        directory / f"{prefix}_graph_labels.txt", num_graphs
    )

    per_graph_edges: list[list[tuple[int, int]]] = [[] for _ in range(num_graphs)]
    for u, v in directed:
        if u < v:
            gid = indicator[u - 1] - 1
            base = offsets[gid]
            per_graph_edges[gid].append((u - 1 - base, v - 1 - base))

    graphs = []
    for gid in range(num_graphs):
        lo, hi = offsets[gid], offsets[gid + 1]
        try:
            graphs.append(
                Graph.from_edges(
                    counts[gid],
                    per_graph_edges[gid],
                    node_labels=node_labels[lo:hi] if node_labels else None,
                    node_attributes=node_attrs[lo:hi] if node_attrs else None,
                )
            )
        except GraphError as exc:
            raise DatasetFormatError(f"graph {gid + 1} of {prefix}: {exc}") from exc
    return GraphCollection(tuple(graphs), tuple(graph_labels) if graph_labels else None)


def _load_per_node_ints(path: Path, expected: int) -> list[int] | None:
    if not path.exists():
        return None
    values = []
    for i, line in enumerate(_read_lines(path), start=1):
        if not line.strip():
            continue
        values.append(_parse_int(line, path, i))
    if len(values) != expected:
        raise DatasetFormatError(f"{path}: expected {expected} lines, got {len(values)}")
    return values


def _load_node_attributes(path: Path, expected: int) -> list[tuple[float, ...]] | None:
    if not path.exists():
        return None
    rows = []
    for i, line in enumerate(_read_lines(path), start=1):
        if not line.strip():
            continue
        try:
            rows.append(tuple(float(tok) for tok in line.split(",")))
        except ValueError:
            raise DatasetFormatError(f"{path}:{i}: malformed attribute row") from None
    if len(rows) != expected:
        raise DatasetFormatError(f"{path}: expected {expected} rows, got {len(rows)}")
    return rows


def save_tudataset(
    collection: GraphCollection, directory: str | Path, prefix: str
) -> None:
    """Emit `collection` in TUDataset format (LF line endings).

    Loading the emitted files yields a collection equal to the input.
    """
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)

    indicator_lines = []
    adjacency: list[tuple[int, int]] = []
    for gid, g in enumerate(collection.graphs):
        base = collection.offsets[gid]
        indicator_lines.extend([str(gid + 1)] * g.n)
        for u, v in g.edge_list():
            adjacency.append((base + u + 1, base + v + 1))
            adjacency.append((base + v + 1, base + u + 1))
    adjacency.sort()

    _write_lines(directory / f"{prefix}_A.txt", (f"{u}, {v}" for u, v in adjacency))
    _write_lines(directory / f"{prefix}_graph_indicator.txt", indicator_lines)

    if all(g.node_labels is not None for g in collection.graphs):
        _write_lines(
            directory / f"{prefix}_node_labels.txt",
            (str(lab) for g in collection.graphs for lab in g.node_labels),
        )
    if all(g.node_attributes is not None for g in collection.graphs):
        _write_lines(
            directory / f"{prefix}_node_attributes.txt",
            (
                ", ".join(repr(x) for x in row)
                for g in collection.graphs
                for row in g.node_attributes
            ),
        )
    if collection.graph_labels is not None:
        _write_lines(
            directory / f"{prefix}_graph_labels.txt",
            (str(lab) for lab in collection.graph_labels),
        )


def _write_lines(path: Path, lines: Iterable[str]) -> None:
    with open(path, "w", newline="\n") as fh:
        for line in lines:
            fh.write(line + "\n")


def make_cycle(n: int) -> Graph:
    """Cycle 0-1-...-(n-1)-0; requires n >= 3."""
    if n < 3:
        raise GraphError(f"cycle needs at least 3 nodes, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def make_complete(n: int) -> Graph:
    """Complete graph on n >= 3 nodes."""
    if n < 3:
        raise GraphError(f"complete graph needs at least 3 nodes, got {n}")
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def make_path(n: int) -> Graph:
    """Path on n >= 1 nodes."""
    if n < 1:
        raise GraphError(f"path needs at least 1 node, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def make_figure1_pair() -> tuple[Graph, Graph]:
    """The worked 6-node pair: a hexagon and two disjoint triangles.

    Node i corresponds to drawn node i+1.  The hexagon runs 1-2-4-5-6-3-1;
    the triangles are {1,4,5} and {2,3,6}.  Both graphs are 2-regular, so
    color refinement never separates them, while depth >= 2 roles do.
    """
    hexagon = Graph.from_edges(6, [(0, 1), (1, 3), (3, 4), (4, 5), (5, 2), (2, 0)])
    triangles = Graph.from_edges(6, [(0, 3), (3, 4), (4, 0), (1, 2), (2, 5), (5, 1)])
    return hexagon, triangles


def gnp_random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Erdos-Renyi G(n, p) from the supplied RNG (deterministic per seed)."""
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def random_bounded_degree_graph(
    n: int, max_degree: int, target_edges: int, rng: random.Random
) -> Graph:
    """Random graph with every degree <= max_degree, for scaling benchmarks."""
    degrees = [0] * n
    edges: set[tuple[int, int]] = set()
    attempts = 0
    limit = 20 * target_edges + 100
    while len(edges) < target_edges and attempts < limit:
        attempts += 1
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v:
            continue
        if u > v:
            u, v = v, u
        if (u, v) in edges or degrees[u] >= max_degree or degrees[v] >= max_degree:
            continue
        edges.add((u, v))
        degrees[u] += 1
        degrees[v] += 1
    return Graph.from_edges(n, sorted(edges))
