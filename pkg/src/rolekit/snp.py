"""Sorted neighbourhood propagation (SNP) embeddings and depth-d SNP roles.

The depth-d embedding of v collects, for every target node u, the exact
number of walks of length 0..d from v to u (the v-rows of the adjacency
powers, computed by repeated propagation rather than matrix powers), strips
the all-zero columns and sorts the remaining columns lexicographically.  Two
nodes share a depth-d SNP role exactly when these embeddings are equal.

Counts are exact integers.  The batch path uses int64 only when the a-priori
bound max_degree**d fits comfortably, otherwise it falls back to unbounded
Python integers; silent wraparound cannot happen.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import Iterator, Sequence, Union

import numpy as np

from .graph import Coloring, Graph, GraphCollection

_INT64_SAFE = 2**62
_DENSE_LIMIT = 4096


@dataclass(frozen=True)
class SnpEmbedding:
    """Walk-count profile of one node: the nonzero columns, sorted.

    Each column is the tuple (walks of length 0, ..., walks of length depth)
    to one target node.  Exactly one column starts with 1 (the node itself,
    length-0 walks); target nodes unreachable within depth contribute nothing.
    """

    depth: int
    columns: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        root_cols = 0
        previous = None
        for col in self.columns:
            if len(col) != self.depth + 1:
                raise ValueError(
                    f"column length {len(col)} does not match depth {self.depth}"
                )
            if any(x < 0 for x in col):
                raise ValueError("walk counts must be nonnegative")
            if not any(col):
                raise ValueError("all-zero columns must be stripped")
            if col[0] == 1:
                root_cols += 1
            elif col[0] != 0:
                raise ValueError("length-0 walk counts can only be 0 or 1")
            if previous is not None and col < previous:
                raise ValueError("columns must be sorted lexicographically")
            previous = col
        if root_cols != 1:
            raise ValueError(f"expected exactly one root column, found {root_cols}")

    def serialize(self) -> str:
        """Columns separated by ';', entries by ',', decimal integers."""
        return ";".join(",".join(str(x) for x in col) for col in self.columns)


def walk_count_rows(g: Graph, v: int, d: int) -> tuple[tuple[int, ...], ...]:
    """Rows 0..d of exact walk counts from v: row k, entry u = number of
    length-k walks from v to u.  Row k+1 propagates row k over adjacency.

    Unbounded Python integers, so overflow is impossible by construction.
    """
    g._check_node(v)
    if d < 0:
        raise ValueError(f"depth must be nonnegative, got {d}")
    row = [0] * g.n
    row[v] = 1
    rows = [tuple(row)]
    for _ in range(d):
        nxt = [0] * g.n
        for u, nb in enumerate(g.neighbors):
            total = 0
            for w in nb:
                total += row[w]
            nxt[u] = total
        row = nxt
        rows.append(tuple(row))
    return tuple(rows)


def snp_embedding(g: Graph, v: int, d: int) -> SnpEmbedding:
    """Depth-d SNP embedding of one node (zero columns stripped, sorted)."""
    rows = walk_count_rows(g, v, d)
    columns = sorted(
        col for col in zip(*rows) if any(col)
    )
    return SnpEmbedding(d, tuple(columns))


def _max_degree(graphs: Sequence[Graph]) -> int:
    return max((len(nb) for g in graphs for nb in g.neighbors), default=0)


def _use_numpy(graphs: Sequence[Graph], d: int) -> bool:
    if any(g.n > _DENSE_LIMIT for g in graphs):
        return False
    return _max_degree(graphs) ** max(d, 1) < _INT64_SAFE


def _graph_depth_columns(
    g: Graph, depths: Sequence[int], use_numpy: bool, as_tuples: bool
) -> list[list]:
    """Per depth in `depths`, one canonical embedding value per node.

    Values are raw int64 bytes (column-major, zero columns stripped, columns
    lex-sorted) on the fast path, or tuples of int tuples otherwise.  Within
    one run all graphs use the same representation, so value equality is
    embedding equality.
    """
    d_max = max(depths)
    n = g.n
    if n == 0:
        return [[] for _ in depths]
    if use_numpy:
        adjacency = np.zeros((n, n), dtype=np.int64)
        for u, nb in enumerate(g.neighbors):
            if nb:
                adjacency[u, list(nb)] = 1
        powers = np.empty((d_max + 1, n, n), dtype=np.int64)
        powers[0] = np.eye(n, dtype=np.int64)
        for k in range(1, d_max + 1):
            np.matmul(powers[k - 1], adjacency, out=powers[k])
        out: list[list] = []
        for d in depths:
            block = powers[: d + 1]
            values = []
            for v in range(n):
                mat = block[:, v, :]
                cols = mat[:, mat.any(axis=0)]
                cols = cols[:, np.lexsort(cols[::-1])]
                if as_tuples:
                    values.append(tuple(map(tuple, cols.T.tolist())))
                else:
                    values.append(cols.tobytes(order="F"))
            out.append(values)
        return out
    # exact fallback: unbounded integers
    all_rows = [walk_count_rows(g, v, d_max) for v in range(n)]
    out = []
    for d in depths:
        values = []
        for v in range(n):
            rows = all_rows[v][: d + 1]
            values.append(tuple(sorted(col for col in zip(*rows) if any(col))))
        out.append(values)
    return out


def _as_collection(
    collection_or_graph: Union[Graph, GraphCollection]
) -> GraphCollection:
    if isinstance(collection_or_graph, Graph):
        return GraphCollection((collection_or_graph,))
    return collection_or_graph


def _collection_depth_values(
    collection: GraphCollection,
    depths: Sequence[int],
    jobs: int,
    as_tuples: bool,
) -> Iterator[list[list]]:
    """Yields per-graph value lists (in collection order)."""
    use_np = _use_numpy(collection.graphs, max(depths))
    worker = partial(
        _graph_depth_columns, depths=tuple(depths), use_numpy=use_np, as_tuples=as_tuples
    )
    if jobs > 1 and collection.num_graphs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunk = max(1, collection.num_graphs // (8 * jobs))
            yield from pool.map(worker, collection.graphs, chunksize=chunk)
    else:
        for g in collection.graphs:
            yield worker(g)


def snp_roles(
    collection_or_graph: Union[Graph, GraphCollection], d: int, jobs: int = 1
) -> Coloring:
    """Depth-d SNP roles over the whole collection (global node index).

    Nodes anywhere in the collection share a role id exactly when their
    depth-d embeddings are equal; ids are canonical by first occurrence.
    """
    return snp_role_sweep(collection_or_graph, d, jobs=jobs, depths=[d])[0]


def snp_role_sweep(
    collection_or_graph: Union[Graph, GraphCollection],
    d_max: int,
    jobs: int = 1,
    depths: Sequence[int] | None = None,
) -> list[Coloring]:
    """SNP role colorings for every depth 0..d_max (or the given depths),
    sharing one walk-count computation per graph."""
    if d_max < 0:
        raise ValueError(f"depth must be nonnegative, got {d_max}")
    collection = _as_collection(collection_or_graph)
    if depths is None:
        depths = list(range(d_max + 1))
    tables: list[dict] = [{} for _ in depths]
    colors: list[list[int]] = [[] for _ in depths]
    for per_graph in _collection_depth_values(collection, depths, jobs, as_tuples=False):
        for di, values in enumerate(per_graph):
            table = tables[di]
            out = colors[di]
            for key in values:
                cid = table.get(key)
                if cid is None:
                    cid = len(table)
                    table[key] = cid
                out.append(cid)
    return [
        Coloring(tuple(colors[di]), len(tables[di])) for di in range(len(depths))
    ]


def collection_embeddings(
    collection_or_graph: Union[Graph, GraphCollection], d: int, jobs: int = 1
) -> Iterator[tuple[int, int, SnpEmbedding]]:
    """Yield (graph_id, node_id, embedding) for every node, in global order."""
    collection = _as_collection(collection_or_graph)
    gid = 0
    for per_graph in _collection_depth_values(collection, [d], jobs, as_tuples=True):
        for local, columns in enumerate(per_graph[0]):
            yield gid, local, SnpEmbedding(d, columns)
        gid += 1
