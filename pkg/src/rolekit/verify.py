"""Randomized cross-checks between the three role computations.

Each check pits independent routes against each other: WL refinement against
unravelling tree codes, identifier-consistent unravelling equivalence against
automorphism orbits of the disjoint union, walk-count propagation against
brute-force walk enumeration, and all partitions against the refinement
hierarchy and isomorphism invariance they must satisfy.  Any disagreement is
a bug in one of the routes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import IO, Callable, Sequence

from .exact import (
    automorphism_orbits,
    exact_roles,
    identified_equivalent,
    unidentified_equivalent,
    unidentified_partition,
)
from .datasets import gnp_random_graph, make_figure1_pair
from .graph import Coloring, Graph, GraphError, disjoint_union
from .partition import equivalent, refines
from .snp import snp_embedding, snp_role_sweep, walk_count_rows
from .wl import wl_roles


@dataclass(frozen=True)
class CheckResult:
    name: str
    cases: int
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def permute_graph(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel g by perm (old index -> new index)."""
    n = g.n
    if sorted(perm) != list(range(n)):
        raise GraphError("perm is not a permutation of the node set")
    edges = [(perm[u], perm[v]) for u, v in g.edge_list()]
    labels = attrs = None
    if g.node_labels is not None:
        new_labels = [0] * n
        for v, lab in enumerate(g.node_labels):
            new_labels[perm[v]] = lab
        labels = new_labels
    if g.node_attributes is not None:
        new_attrs: list = [None] * n
        for v, row in enumerate(g.node_attributes):
            new_attrs[perm[v]] = row
        attrs = new_attrs
    return Graph.from_edges(n, edges, node_labels=labels, node_attributes=attrs)


def brute_force_walk_counts(g: Graph, v: int, d: int) -> list[list[int]]:
    """Walk counts by explicit enumeration of all walks of length <= d.
    Exponential; independent oracle for walk_count_rows."""
    counts = [[0] * g.n for _ in range(d + 1)]

    def extend(x: int, k: int) -> None:
        counts[k][x] += 1
        if k < d:
            for w in g.neighbors[x]:
                extend(w, k + 1)

    extend(v, 0)
    return counts


def _permuted_partition(c: Coloring, perm: Sequence[int]) -> Coloring:
    """Partition a permuted graph must produce: node v gets the class of
    perm[v]."""
    return Coloring.from_labels(c.colors[perm[v]] for v in range(len(c)))


def check_figure1(rng: random.Random, cases: int) -> CheckResult:
    """Golden behaviour on the hexagon / two-triangles pair."""
    failures = []
    hexagon, triangles = make_figure1_pair()
    union = disjoint_union([hexagon, triangles])

    trace = wl_roles(union, 6)
    for d, coloring in enumerate(trace.colorings):
        if coloring.num_classes != 1:
            failures.append(f"wl depth {d}: {coloring.num_classes} classes, want 1")

    snp_parts = snp_role_sweep(union, 6)
    for d in range(7):
        want = 1 if d <= 1 else 2
        if snp_parts[d].num_classes != want:
            failures.append(
                f"snp depth {d}: {snp_parts[d].num_classes} classes, want {want}"
            )
        got_exact = exact_roles(union, d).num_classes
        if got_exact != want:
            failures.append(f"exact depth {d}: {got_exact} classes, want {want}")

    rows_hex = walk_count_rows(hexagon, 0, 3)
    rows_tri = walk_count_rows(triangles, 0, 3)
    # drawn node i is index i-1
    golden = [
        (rows_hex[2], {0: 2, 3: 1, 5: 1}),
        (rows_hex[3], {1: 3, 2: 3, 4: 2}),
        (rows_tri[3], {3: 3, 4: 3, 0: 2}),
    ]
    for row, want in golden:
        got = {u: x for u, x in enumerate(row) if x}
        if got != want:
            failures.append(f"walk counts {got} != {want}")
    return CheckResult("figure1-golden", 1, tuple(failures))


def check_prop_color_refinement(rng: random.Random, cases: int) -> CheckResult:
    """WL coloring at depth d vs the unravelling tree-code partition."""
    failures = []
    for i in range(cases):
        n = rng.randint(1, 10)
        p = 0.2 if i % 2 == 0 else 0.5
        g = gnp_random_graph(n, p, rng)
        trace = wl_roles(g, 4)
        for d in range(5):
            if not equivalent(trace[d], unidentified_partition(g, d)):
                failures.append(f"case {i} (n={n}, p={p}, d={d}): partitions differ")
    return CheckResult("wl-vs-tree-codes", cases, tuple(failures))


def check_prop_orbits(rng: random.Random, cases: int) -> CheckResult:
    """Identifier-consistent equivalence at d = max(n1, n2) vs shared orbit
    in the disjoint union, over all cross-graph node pairs."""
    failures = []
    for i in range(cases):
        n1, n2 = rng.randint(1, 6), rng.randint(1, 6)
        g1 = gnp_random_graph(n1, rng.choice([0.2, 0.5]), rng)
        g2 = gnp_random_graph(n2, rng.choice([0.2, 0.5]), rng)
        d = max(n1, n2)
        union = disjoint_union([g1, g2])
        orbits = automorphism_orbits(union, max_nodes=12).colors
        for u in range(n1):
            for v in range(n2):
                equiv = identified_equivalent(g1, u, g2, v, d)
                if equiv and not unidentified_equivalent(g1, u, g2, v, d):
                    failures.append(
                        f"case {i}: ({u},{v}) identified but not unidentified"
                    )
                same_orbit = orbits[u] == orbits[n1 + v]
                if equiv != same_orbit:
                    failures.append(
                        f"case {i} (n1={n1}, n2={n2}, d={d}): pair ({u},{v}) "
                        f"identified={equiv} but same_orbit={same_orbit}"
                    )
    return CheckResult("identified-vs-orbits", cases, tuple(failures))


def check_hierarchy(rng: random.Random, cases: int) -> CheckResult:
    """Exact roles refine WL and SNP roles; every method refines with depth."""
    failures = []
    d_max = 4
    for i in range(cases):
        n = rng.randint(1, 8)
        g = gnp_random_graph(n, rng.choice([0.2, 0.4, 0.6]), rng)
        exact = [exact_roles(g, d) for d in range(d_max + 1)]
        wl = wl_roles(g, d_max)
        snp = snp_role_sweep(g, d_max)
        for d in range(d_max + 1):
            if not refines(exact[d], wl[d]):
                failures.append(f"case {i} d={d}: exact does not refine wl")
            if not refines(exact[d], snp[d]):
                failures.append(f"case {i} d={d}: exact does not refine snp")
            if d > 0:
                for name, seq in (("exact", exact), ("wl", wl.colorings), ("snp", snp)):
                    if not refines(seq[d], seq[d - 1]):
                        failures.append(
                            f"case {i} d={d}: {name} depth {d} does not refine {d - 1}"
                        )
    return CheckResult("refinement-hierarchy", cases, tuple(failures))


def check_invariance(rng: random.Random, cases: int) -> CheckResult:
    """Embeddings and all three partitions are invariant under relabeling."""
    failures = []
    d = 3
    for i in range(cases):
        n = rng.randint(1, 8)
        g = gnp_random_graph(n, rng.choice([0.3, 0.6]), rng)
        perm = list(range(n))
        rng.shuffle(perm)
        pg = permute_graph(g, perm)
        for v in range(n):
            if snp_embedding(g, v, d) != snp_embedding(pg, perm[v], d):
                failures.append(f"case {i}: snp embedding of node {v} not invariant")
        pairs = [
            ("wl", wl_roles(g, d)[d], wl_roles(pg, d)[d]),
            ("snp", snp_role_sweep(g, d)[d], snp_role_sweep(pg, d)[d]),
            ("exact", exact_roles(g, d), exact_roles(pg, d)),
        ]
        for name, orig, permuted in pairs:
            if not equivalent(orig, _permuted_partition(permuted, perm)):
                failures.append(f"case {i}: {name} partition not invariant")
    return CheckResult("isomorphism-invariance", cases, tuple(failures))


def check_walk_counts(rng: random.Random, cases: int) -> CheckResult:
    """Propagated walk counts vs brute-force walk enumeration."""
    failures = []
    for i in range(cases):
        n = rng.randint(1, 6)
        g = gnp_random_graph(n, rng.choice([0.3, 0.7]), rng)
        d = rng.randint(0, 4)
        for v in range(n):
            got = [list(row) for row in walk_count_rows(g, v, d)]
            want = brute_force_walk_counts(g, v, d)
            if got != want:
                failures.append(f"case {i}: walk counts differ at node {v}, d={d}")
    return CheckResult("walk-count-enumeration", cases, tuple(failures))


_CHECKS: tuple[tuple[Callable[[random.Random, int], CheckResult], int], ...] = (
    (check_figure1, 1),
    (check_prop_color_refinement, 1),
    (check_prop_orbits, 4),
    (check_hierarchy, 2),
    (check_invariance, 2),
    (check_walk_counts, 4),
)


def run_verify(seed: int, trials: int, stream: IO[str]) -> bool:
    """Run every check; one report line per check.  True iff all pass."""
    all_ok = True
    for index, (check, divisor) in enumerate(_CHECKS):
        rng = random.Random(seed * 1000003 + index)
        cases = max(1, trials // divisor)
        result = check(rng, cases)
        if result.ok:
            stream.write(f"{result.name}: ok ({result.cases} cases)\n")
        else:
            all_ok = False
            stream.write(
                f"{result.name}: FAIL ({len(result.failures)} failures, "
                f"{result.cases} cases)\n"
            )
            for failure in result.failures[:10]:
                stream.write(f"  {failure}\n")
    return all_ok
