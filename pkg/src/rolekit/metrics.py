"""Role-count statistics and the overlap score of the depth-sweep experiment.

The overlap score of a role partition against per-node labels is
(a - b) / (1 - b), where a is the accuracy of predicting, inside every role
class, its most frequent label, and b is the baseline accuracy of always
guessing the globally most probable label (the depth-0 accuracy under a
constant initial coloring).  For an all-same-label dataset b = 1 and the
score is undefined; that is reported as an explicit sentinel (CSV `NA`),
never as 0.
"""

from __future__ import annotations

import csv
from collections import Counter
from dataclasses import dataclass
from typing import IO, Sequence

from .exact import exact_roles
from .graph import Coloring, GraphCollection
from .snp import snp_role_sweep
from .wl import wl_roles

SWEEP_METHODS = ("wl", "snp", "exact")
SWEEP_CSV_HEADER = ("dataset", "method", "depth", "num_roles", "roles_per_node", "overlap")


@dataclass(frozen=True)
class DepthSweepRow:
    depth: int
    method: str
    num_roles: int
    roles_per_node: float
    overlap: float | None


def majority_correct(roles: Coloring, labels: Sequence[int]) -> int:
    """Number of nodes whose label is the most frequent one in their role
    class (ties counted once, toward either label)."""
    if len(roles) != len(labels):
        raise ValueError(f"{len(roles)} roles vs {len(labels)} labels")
    if len(roles) == 0:
        raise ValueError("empty input")
    per_class: list[Counter] = [Counter() for _ in range(roles.num_classes)]
    for color, label in zip(roles.colors, labels):
        per_class[color][label] += 1
    return sum(max(counts.values()) for counts in per_class)


def majority_accuracy(roles: Coloring, labels: Sequence[int]) -> float:
    """Fraction of nodes matching their role class's most frequent label."""
    return majority_correct(roles, labels) / len(roles)


def overlap_score(
    roles: Coloring, labels: Sequence[int], baseline: float
) -> float | None:
    """(a - b) / (1 - b) with a = majority_accuracy; None when b = 1."""
    if not 0.0 <= baseline <= 1.0:
        raise ValueError(f"baseline must be in [0, 1], got {baseline}")
    a = majority_accuracy(roles, labels)
    if baseline == 1.0:
        return None
    majority_freq = max(Counter(labels).values()) / len(roles)
    if baseline == majority_freq:
        # every partition refines the depth-0 one, so a can never undershoot b
        assert a >= baseline - 1e-12
    return (a - baseline) / (1.0 - baseline)


def depth_sweep(
    collection: GraphCollection,
    method: str,
    d_max: int,
    exact_max_nodes: int = 32,
    jobs: int = 1,
) -> list[DepthSweepRow]:
    """Dataset-wide roles for every depth 0..d_max with one chosen method.

    Roles are computed jointly over the collection (WL by refinement of the
    disjoint union, SNP by embedding equality across graphs, exact on the
    union, size-guarded), then scored against the per-node labels.  Without
    node labels the overlap column is the undefined sentinel.
    """
    if method not in SWEEP_METHODS:
        raise ValueError(f"method must be one of {SWEEP_METHODS}, got {method!r}")
    if d_max < 0:
        raise ValueError(f"depth range must be nonnegative, got {d_max}")
    if collection.total_nodes == 0:
        raise ValueError("cannot sweep an empty collection")

    if method == "wl":
        trace = wl_roles(collection, d_max)
        colorings = list(trace.colorings)
    elif method == "snp":
        colorings = snp_role_sweep(collection, d_max, jobs=jobs)
    else:
        union = collection.union()
        colorings = [exact_roles(union, d, max_nodes=exact_max_nodes) for d in range(d_max + 1)]

    labels = collection.node_labels_flat()
    n = collection.total_nodes
    base_correct = max(Counter(labels).values()) if labels is not None else None

    rows = []
    for d, coloring in enumerate(colorings):
        overlap: float | None = None
        if labels is not None and base_correct is not None and base_correct < n:
            correct = majority_correct(coloring, labels)
            overlap = (correct - base_correct) / (n - base_correct)
        rows.append(
            DepthSweepRow(
                depth=d,
                method=method,
                num_roles=coloring.num_classes,
                roles_per_node=coloring.num_classes / n,
                overlap=overlap,
            )
        )
    return rows


def write_sweep_csv(rows: Sequence[DepthSweepRow], dataset: str, fh: IO[str]) -> None:
    """`dataset,method,depth,num_roles,roles_per_node,overlap`; fractions as
    6-decimal fixed point, undefined overlap as NA."""
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(SWEEP_CSV_HEADER)
    for row in rows:
        writer.writerow(
            [
                dataset,
                row.method,
                row.depth,
                row.num_roles,
                f"{row.roles_per_node:.6f}",
                "NA" if row.overlap is None else f"{row.overlap:.6f}",
            ]
        )


def read_sweep_csv(fh: IO[str]) -> list[tuple[str, DepthSweepRow]]:
    """Parse write_sweep_csv output back into (dataset, row) pairs."""
    reader = csv.reader(fh)
    header = next(reader, None)
    if header is None or tuple(header) != SWEEP_CSV_HEADER:
        raise ValueError(f"unexpected sweep CSV header: {header}")
    out = []
    for record in reader:
        if not record:
            continue
        dataset, method, depth, num_roles, rpn, overlap = record
        out.append(
            (
                dataset,
                DepthSweepRow(
                    depth=int(depth),
                    method=method,
                    num_roles=int(num_roles),
                    roles_per_node=float(rpn),
                    overlap=None if overlap == "NA" else float(overlap),
                ),
            )
        )
    return out


def roles_union_coloring(
    collection: GraphCollection,
    method: str,
    d: int,
    exact_max_nodes: int = 32,
    jobs: int = 1,
) -> Coloring:
    """One dataset-wide role coloring at a single depth (global node index)."""
    if method not in SWEEP_METHODS:
        raise ValueError(f"method must be one of {SWEEP_METHODS}, got {method!r}")
    if method == "wl":
        return wl_roles(collection, d).colorings[d]
    if method == "snp":
        return snp_role_sweep(collection, d, depths=[d], jobs=jobs)[0]
    return exact_roles(collection.union(), d, max_nodes=exact_max_nodes)
