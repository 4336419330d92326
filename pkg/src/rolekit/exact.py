"""Exact depth-d node roles via unravellings, plus automorphism orbits.

A depth-d unravelling rooted at v is the tree of all walks of length at most
d starting at v; the node for a walk carries the walk's final graph vertex as
its identifier.  Two nodes are depth-d equivalent when their unravellings
admit a rooted-tree isomorphism under which equal identifiers map to equal
identifiers (a well-defined bijection).  Dropping the identifiers gives the
coarser tree-isomorphism equivalence, decided here by canonical AHU codes.

Everything in this module is exponential or worse in principle and guarded
by explicit size bounds; it is the ground-truth oracle for small graphs, not
a scalable algorithm.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .graph import Coloring, Graph
from .wl import stable_coloring


class SizeLimitExceeded(RuntimeError):
    """A size guard tripped; raise the bound explicitly if you mean it."""


@dataclass(frozen=True)
class UnravellingTree:
    """Rooted tree of all walks of length <= depth from one vertex.

    Tree nodes are stored in BFS order as (parent index, final walk vertex);
    node 0 is the root (the length-0 walk).  level_offsets[k] is the index of
    the first node at walk length k, with a trailing sentinel.
    """

    parents: tuple[int, ...]
    vertices: tuple[int, ...]
    depth: int
    level_offsets: tuple[int, ...]

    @property
    def num_nodes(self) -> int:
        return len(self.parents)

    def level(self, k: int) -> range:
        if not 0 <= k <= self.depth:
            raise ValueError(f"level {k} out of range 0..{self.depth}")
        return range(self.level_offsets[k], self.level_offsets[k + 1])

    def level_id_counts(self, k: int) -> Counter:
        """Multiset of identifiers (graph vertices) at walk length k."""
        return Counter(self.vertices[i] for i in self.level(k))

    def walk(self, node: int) -> tuple[int, ...]:
        """The walk (v, x1, ..., xk) a tree node stands for."""
        path = []
        while node != -1:
            path.append(self.vertices[node])
            node = self.parents[node]
        return tuple(reversed(path))

    def canonical_code(self):
        """AHU canonical form ignoring identifiers: equal codes iff the
        rooted trees are isomorphic."""
        children: list[list[int]] = [[] for _ in range(self.num_nodes)]
        for i in range(1, self.num_nodes):
            children[self.parents[i]].append(i)
        code: list[tuple] = [()] * self.num_nodes
        for i in range(self.num_nodes - 1, -1, -1):
            code[i] = tuple(sorted(code[ch] for ch in children[i]))
        return code[0]


def build_unravelling(
    g: Graph, v: int, d: int, max_nodes: int = 1_000_000
) -> UnravellingTree:
    """Materialize the depth-d unravelling rooted at v, level by level.

    Tree size grows like deg(G)^d, hence the hard cap; exceeding it raises
    instead of silently truncating.
    """
    g._check_node(v)
    if d < 0:
        raise ValueError(f"depth must be nonnegative, got {d}")
    parents = [-1]
    vertices = [v]
    offsets = [0, 1]
    frontier = [(0, v)]
    for _ in range(d):
        new_frontier = []
        for node_idx, x in frontier:
            for w in g.neighbors[x]:
                if len(parents) >= max_nodes:
                    raise SizeLimitExceeded(
                        f"unravelling exceeds {max_nodes} walk nodes; "
                        "raise max_nodes to allow this"
                    )
                new_frontier.append((len(parents), w))
                parents.append(node_idx)
                vertices.append(w)
        frontier = new_frontier
        offsets.append(len(parents))
    return UnravellingTree(tuple(parents), tuple(vertices), d, tuple(offsets))


def _ahu_tables(graphs: list[Graph], d: int) -> list[list[list[int]]]:
    """Per-graph tables[gi][k][v]: interned AHU code of the depth-k
    unravelling at v.  One shared interning table makes codes comparable
    across the supplied graphs; code 0 is the single-node tree."""
    intern: dict[tuple[int, ...], int] = {}
    tables = [[[0] * g.n] for g in graphs]
    for k in range(1, d + 1):
        for gi, g in enumerate(graphs):
            prev = tables[gi][k - 1]
            row = []
            for v in range(g.n):
                key = tuple(sorted(prev[u] for u in g.neighbors[v]))
                code = intern.get(key)
                if code is None:
                    code = len(intern) + 1
                    intern[key] = code
                row.append(code)
            tables[gi].append(row)
    return tables


def unidentified_equivalent(g1: Graph, u: int, g2: Graph, v: int, d: int) -> bool:
    """True iff the depth-d unravellings at u and v are isomorphic as plain
    rooted trees (identifiers ignored)."""
    g1._check_node(u)
    g2._check_node(v)
    if d < 0:
        raise ValueError(f"depth must be nonnegative, got {d}")
    if g1 is g2:
        tables = _ahu_tables([g1], d)
        return tables[0][d][u] == tables[0][d][v]
    t1, t2 = _ahu_tables([g1, g2], d)
    return t1[d][u] == t2[d][v]


def unidentified_partition(g: Graph, d: int) -> Coloring:
    """Partition of V(g) by depth-d unravelling isomorphism (AHU codes)."""
    if d < 0:
        raise ValueError(f"depth must be nonnegative, got {d}")
    tables = _ahu_tables([g], d)
    return Coloring.from_labels(tables[0][d])


class _IdentifiedMatcher:
    """Complete backtracking search for an identifier-consistent isomorphism
    between depth-d unravellings in g1 and g2.

    A consistent tree isomorphism with identifier bijection pi exists exactly
    when pi, restricted to the d-ball around u, maps u to v, is injective,
    and maps N(a) bijectively onto N(pi(a)) for every a in the (d-1)-ball
    (pi then transports walks to walks in both directions, which is the tree
    isomorphism).  So the search assigns ball vertices in BFS order; images
    must sit at the same distance, carry the same unidentified subtree code
    for the remaining depth, and respect adjacency to every assigned
    neighbor whenever one endpoint lies inside the (d-1)-ball.
    """

    def __init__(self, g1: Graph, g2: Graph, d: int) -> None:
        self.g1 = g1
        self.g2 = g2
        self.d = d
        if g1 is g2:
            tables = _ahu_tables([g1], d)
            self.codes1 = self.codes2 = tables[0]
        else:
            self.codes1, self.codes2 = _ahu_tables([g1, g2], d)
        self.adjset2 = [set(nb) for nb in g2.neighbors]
        self._dist1: dict[int, list[int]] = {}
        self._dist2: dict[int, list[int]] = {}

    def _distances(self, g: Graph, cache: dict[int, list[int]], root: int) -> list[int]:
        dist = cache.get(root)
        if dist is None:
            dist = [-1] * g.n
            dist[root] = 0
            frontier = [root]
            level = 0
            while frontier and level < self.d:
                level += 1
                nxt = []
                for x in frontier:
                    for w in g.neighbors[x]:
                        if dist[w] == -1:
                            dist[w] = level
                            nxt.append(w)
                frontier = nxt
            cache[root] = dist
        return dist

    def equivalent(self, u: int, v: int) -> bool:
        if self.g1 is self.g2 and u == v:
            return True
        d = self.d
        if self.codes1[d][u] != self.codes2[d][v]:
            return False
        dist1 = self._distances(self.g1, self._dist1, u)
        dist2 = self._distances(self.g2, self._dist2, v)
        order = sorted(
            (x for x in range(self.g1.n) if dist1[x] >= 0),
            key=lambda x: (dist1[x], x),
        )
        ball2_levels: dict[int, int] = {}
        for y in range(self.g2.n):
            if dist2[y] >= 0:
                ball2_levels[dist2[y]] = ball2_levels.get(dist2[y], 0) + 1
        levels1: dict[int, int] = {}
        for x in order:
            levels1[dist1[x]] = levels1.get(dist1[x], 0) + 1
        if levels1 != ball2_levels:
            return False

        adj1 = self.g1.neighbors
        adj2 = self.g2.neighbors
        adjset2 = self.adjset2
        codes1, codes2 = self.codes1, self.codes2
        pi = [-1] * self.g1.n
        used = [False] * self.g2.n
        # an already-assigned neighbor one level closer to the root, per vertex
        anchor = {
            x: next(w for w in adj1[x] if dist1[w] == dist1[x] - 1)
            for x in order
            if dist1[x] > 0
        }

        def assign(pos: int) -> bool:
            if pos == len(order):
                return True
            x = order[pos]
            level = dist1[x]
            remaining = d - level
            inner = level <= d - 1
            if level == 0:
                candidates: Iterable[int] = (v,)
            else:
                candidates = adj2[pi[anchor[x]]]
            for y in candidates:
                if used[y] or dist2[y] != level:
                    continue
                if codes1[remaining][x] != codes2[remaining][y]:
                    continue
                if inner and len(adj1[x]) != len(adj2[y]):
                    continue
                ok = True
                for w in adj1[x]:
                    mapped = pi[w]
                    if mapped == -1:
                        continue
                    if (inner or dist1[w] <= d - 1) and mapped not in adjset2[y]:
                        ok = False
                        break
                if not ok:
                    continue
                pi[x] = y
                used[y] = True
                if assign(pos + 1):
                    return True
                pi[x] = -1
                used[y] = False
            return False

        return assign(0)


def identified_equivalent(g1: Graph, u: int, g2: Graph, v: int, d: int) -> bool:
    """True iff some rooted-tree isomorphism between the depth-d unravellings
    at u and v maps identifiers through a well-defined bijection.

    Complete search; may be expensive, so callers bound graph size.
    """
    g1._check_node(u)
    g2._check_node(v)
    if d < 0:
        raise ValueError(f"depth must be nonnegative, got {d}")
    if g1 is g2 and u == v:
        return True
    return _IdentifiedMatcher(g1, g2, d).equivalent(u, v)


def exact_roles(g: Graph, d: int, max_nodes: int = 32) -> Coloring:
    """Partition of V(g) into exact depth-d roles (identifier-consistent
    unravelling equivalence).

    Pairwise equivalence against class representatives; equivalence classes
    are well defined because the relation is an equivalence, and under
    __debug__ each node is additionally checked against the representatives
    it did not join.
    """
    if g.n > max_nodes:
        raise SizeLimitExceeded(
            f"exact_roles guard: graph has {g.n} nodes, bound is {max_nodes}"
        )
    if d < 0:
        raise ValueError(f"depth must be nonnegative, got {d}")
    matcher = _IdentifiedMatcher(g, g, d)
    codes = matcher.codes1[d]
    reps_by_code: dict[int, list[int]] = {}
    rep_role: dict[int, int] = {}
    roles = []
    for v in range(g.n):
        assigned = None
        candidates = reps_by_code.setdefault(codes[v], [])
        for r in candidates:
            if matcher.equivalent(v, r):
                assigned = rep_role[r]
                if __debug__:
                    rest = candidates[candidates.index(r) + 1 :]
                    assert not any(
                        matcher.equivalent(v, other) for other in rest
                    ), "identified equivalence is not transitive on this input"
                break
        if assigned is None:
            assigned = len(rep_role)
            rep_role[v] = assigned
            candidates.append(v)
        roles.append(assigned)
    return Coloring(tuple(roles), len(rep_role))


OrbitPartition = Coloring


def automorphism_orbits(g: Graph, max_nodes: int = 10) -> OrbitPartition:
    """Exact automorphism orbits by backtracking search, pruned by the
    WL-stable coloring (orbits always refine it).

    For every not-yet-merged same-color pair the search looks for one
    automorphism mapping the pair; each automorphism found merges all its
    (x, pi(x)) pairs at once.
    """
    if g.n > max_nodes:
        raise SizeLimitExceeded(
            f"automorphism_orbits guard: graph has {g.n} nodes, bound is {max_nodes}"
        )
    n = g.n
    base = stable_coloring(g)[0].colors if n else ()
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[ry] = rx

    for u in range(n):
        for v in range(u + 1, n):
            if base[u] != base[v] or find(u) == find(v):
                continue
            perm = _find_automorphism(g, base, u, v)
            if perm is not None:
                for x, y in enumerate(perm):
                    union(x, y)
    return Coloring.from_labels(find(x) for x in range(n))


def _find_automorphism(
    g: Graph, base: tuple[int, ...], u: int, v: int
) -> list[int] | None:
    """One automorphism of g with u -> v, or None.  Complete backtracking;
    candidates must share the stable color and respect adjacency to every
    already-mapped vertex."""
    n = g.n
    adj = [set(nb) for nb in g.neighbors]

    # order: BFS from u first so adjacency constraints bind early
    order = []
    seen = [False] * n
    queue = [u]
    seen[u] = True
    while queue:
        x = queue.pop(0)
        order.append(x)
        for w in g.neighbors[x]:
            if not seen[w]:
                seen[w] = True
                queue.append(w)
    rest = [x for x in range(n) if not seen[x]]
    rest.sort(key=lambda x: (sum(1 for y in range(n) if base[y] == base[x]), x))
    order.extend(rest)

    mapping = [-1] * n
    used = [False] * n

    def consistent(x: int, y: int) -> bool:
        if base[x] != base[y]:
            return False
        for w in order:
            mw = mapping[w]
            if mw == -1:
                continue
            if (w in adj[x]) != (mw in adj[y]):
                return False
        return True

    def extend(pos: int) -> bool:
        if pos == n:
            return True
        x = order[pos]
        for y in range(n):
            if used[y] or not consistent(x, y):
                continue
            mapping[x] = y
            used[y] = True
            if extend(pos + 1):
                return True
            mapping[x] = -1
            used[y] = False
        return False

    if not consistent(u, v):
        return None
    mapping[u] = v
    used[v] = True
    if extend(1):
        return mapping
    return None
