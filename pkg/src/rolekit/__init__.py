"""Scale-dependent node roles on undirected graphs.

Three computations of depth-d roles: the exact oracle via node-identified
unravellings, WL color refinement (depth-d WL roles) and SNP walk-count
embeddings (depth-d SNP roles), plus dataset loading, depth-sweep metrics
and a CLI.
"""

from .graph import (
    Coloring,
    Graph,
    GraphCollection,
    GraphError,
    constant_coloring,
    disjoint_union,
    induced_subgraph,
    k_hop_neighborhood,
    label_coloring,
)
from .partition import class_sizes, equivalent, meet, num_classes, refines
from .datasets import (
    DatasetFormatError,
    gnp_random_graph,
    load_tudataset,
    make_complete,
    make_cycle,
    make_figure1_pair,
    make_path,
    random_bounded_degree_graph,
    save_tudataset,
)
from .exact import (
    OrbitPartition,
    SizeLimitExceeded,
    UnravellingTree,
    automorphism_orbits,
    build_unravelling,
    exact_roles,
    identified_equivalent,
    unidentified_equivalent,
    unidentified_partition,
)
from .wl import RefinementTrace, refine_step, stable_coloring, wl_roles
from .snp import (
    SnpEmbedding,
    collection_embeddings,
    snp_embedding,
    snp_role_sweep,
    snp_roles,
    walk_count_rows,
)
from .metrics import (
    DepthSweepRow,
    depth_sweep,
    majority_accuracy,
    majority_correct,
    overlap_score,
    read_sweep_csv,
    roles_union_coloring,
    write_sweep_csv,
)
from .verify import brute_force_walk_counts, permute_graph, run_verify

__version__ = "0.1.0"

__all__ = [
    "Coloring",
    "DatasetFormatError",
    "DepthSweepRow",
    "Graph",
    "GraphCollection",
    "GraphError",
    "OrbitPartition",
    "RefinementTrace",
    "SizeLimitExceeded",
    "SnpEmbedding",
    "UnravellingTree",
    "automorphism_orbits",
    "brute_force_walk_counts",
    "build_unravelling",
    "class_sizes",
    "collection_embeddings",
    "constant_coloring",
    "depth_sweep",
    "disjoint_union",
    "equivalent",
    "exact_roles",
    "gnp_random_graph",
    "identified_equivalent",
    "induced_subgraph",
    "k_hop_neighborhood",
    "label_coloring",
    "load_tudataset",
    "majority_accuracy",
    "majority_correct",
    "make_complete",
    "make_cycle",
    "make_figure1_pair",
    "make_path",
    "meet",
    "num_classes",
    "overlap_score",
    "permute_graph",
    "random_bounded_degree_graph",
    "read_sweep_csv",
    "refine_step",
    "refines",
    "roles_union_coloring",
    "run_verify",
    "save_tudataset",
    "snp_embedding",
    "snp_role_sweep",
    "snp_roles",
    "stable_coloring",
    "unidentified_equivalent",
    "unidentified_partition",
    "walk_count_rows",
    "wl_roles",
    "write_sweep_csv",
]
