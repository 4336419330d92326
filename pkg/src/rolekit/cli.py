"""Command-line front end.

Subcommands:
  roles   per-node role assignment (`graph_id,node_id,role_id`)
  sweep   depth sweep (`dataset,method,depth,num_roles,roles_per_node,overlap`)
  verify  randomized cross-checks of the role computations

Exit codes: 0 success, 1 I/O or parse failure, 2 invalid configuration,
3 exact-oracle size-guard violation, 4 verify property violation.

Data goes to the output target only (stdout when `-o -`); progress and
reports go to stderr.  Identical configuration and seed produce
byte-identical output files.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import json
import os
import sys
from pathlib import Path
from typing import IO, Iterator

from .datasets import DatasetFormatError, load_tudataset
from .exact import SizeLimitExceeded
from .graph import GraphCollection
from .metrics import depth_sweep, roles_union_coloring, write_sweep_csv
from .snp import collection_embeddings
from .verify import run_verify

EXIT_OK = 0
EXIT_IO = 1
EXIT_CONFIG = 2
EXIT_SIZE_GUARD = 3
EXIT_VERIFY_FAILED = 4

DATA_DIR_ENV = "ROLEKIT_DATA_DIR"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rolekit",
        description="Scale-dependent node roles: exact, WL and SNP variants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_dataset_options(p: argparse.ArgumentParser) -> None:
        p.add_argument("--dataset", help=f"dataset directory (default: ${DATA_DIR_ENV}/PREFIX)")
        p.add_argument("--prefix", required=True, help="TUDataset file prefix, e.g. MUTAG")
        p.add_argument("-o", "--output", default="-", help="output path, '-' for stdout")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--jobs", type=int, default=1, help="parallel workers for SNP")
        p.add_argument(
            "--max-exact-nodes",
            type=int,
            default=32,
            help="size guard for the exact oracle (total nodes)",
        )

    roles = sub.add_parser("roles", help="per-node role ids at one depth")
    add_dataset_options(roles)
    roles.add_argument("--method", choices=("wl", "snp", "exact"), required=True)
    roles.add_argument("--depth", type=int, required=True)
    roles.add_argument(
        "--dump-embeddings",
        metavar="PATH",
        help="also write SNP embeddings, one 'graph_id,node_id,<columns>' line per node",
    )
    roles.set_defaults(func=cmd_roles)

    sweep = sub.add_parser("sweep", help="role counts and overlap for depths 0..D")
    add_dataset_options(sweep)
    sweep.add_argument("--method", choices=("wl", "snp", "exact"), required=True)
    sweep.add_argument("--max-depth", type=int, required=True)
    sweep.set_defaults(func=cmd_sweep)

    verify = sub.add_parser("verify", help="run randomized property checks")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--trials", type=int, default=50)
    verify.set_defaults(func=cmd_verify)

    return parser


def _load_collection(args: argparse.Namespace) -> GraphCollection:
    if args.dataset:
        directory = Path(args.dataset)
    else:
        root = os.environ.get(DATA_DIR_ENV)
        if not root:
            raise ConfigError(
                f"--dataset not given and ${DATA_DIR_ENV} is not set"
            )
        directory = Path(root) / args.prefix
    collection = load_tudataset(directory, args.prefix)
    print(
        f"loaded {collection.num_graphs} graphs, {collection.total_nodes} nodes "
        f"from {directory}",
        file=sys.stderr,
    )
    return collection


class ConfigError(ValueError):
    pass


@contextlib.contextmanager
def _open_output(target: str) -> Iterator[IO[str]]:
    if target == "-":
        yield sys.stdout
    else:
        with open(target, "w", newline="\n") as fh:
            yield fh


def _check_common(args: argparse.Namespace) -> None:
    if args.jobs < 1:
        raise ConfigError(f"--jobs must be at least 1, got {args.jobs}")
    if args.max_exact_nodes < 0:
        raise ConfigError("--max-exact-nodes must be nonnegative")


def cmd_roles(args: argparse.Namespace) -> int:
    _check_common(args)
    if args.depth < 0:
        raise ConfigError(f"--depth must be nonnegative, got {args.depth}")
    if args.dump_embeddings and args.method != "snp":
        raise ConfigError("--dump-embeddings requires --method snp")
    collection = _load_collection(args)
    coloring = roles_union_coloring(
        collection,
        args.method,
        args.depth,
        exact_max_nodes=args.max_exact_nodes,
        jobs=args.jobs,
    )
    records = []
    for global_index, role in enumerate(coloring.colors):
        gid, local = collection.locate(global_index)
        records.append((gid, local, role))
    with _open_output(args.output) as fh:
        if args.format == "csv":
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(("graph_id", "node_id", "role_id"))
            writer.writerows(records)
        else:
            json.dump(
                [
                    {"graph_id": gid, "node_id": local, "role_id": role}
                    for gid, local, role in records
                ],
                fh,
            )
            fh.write("\n")
    if args.dump_embeddings:
        with open(args.dump_embeddings, "w", newline="\n") as fh:
            for gid, local, emb in collection_embeddings(
                collection, args.depth, jobs=args.jobs
            ):
                fh.write(f"{gid},{local},{emb.serialize()}\n")
    print(f"{coloring.num_classes} distinct roles", file=sys.stderr)
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    _check_common(args)
    if args.max_depth < 0:
        raise ConfigError(f"empty depth range: --max-depth {args.max_depth}")
    collection = _load_collection(args)
    rows = depth_sweep(
        collection,
        args.method,
        args.max_depth,
        exact_max_nodes=args.max_exact_nodes,
        jobs=args.jobs,
    )
    with _open_output(args.output) as fh:
        if args.format == "csv":
            write_sweep_csv(rows, args.prefix, fh)
        else:
            json.dump(
                [
                    {
                        "dataset": args.prefix,
                        "method": row.method,
                        "depth": row.depth,
                        "num_roles": row.num_roles,
                        "roles_per_node": row.roles_per_node,
                        "overlap": row.overlap,
                    }
                    for row in rows
                ],
                fh,
            )
            fh.write("\n")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.trials < 1:
        raise ConfigError(f"--trials must be positive, got {args.trials}")
    ok = run_verify(args.seed, args.trials, sys.stderr)
    if ok:
        print("all checks passed", file=sys.stderr)
        return EXIT_OK
    print("property violation detected", file=sys.stderr)
    return EXIT_VERIFY_FAILED


def read_roles_csv(fh: IO[str]) -> list[tuple[int, int, int]]:
    """Parse cmd_roles CSV output back into (graph_id, node_id, role_id)."""
    reader = csv.reader(fh)
    header = next(reader, None)
    if header != ["graph_id", "node_id", "role_id"]:
        raise ValueError(f"unexpected roles CSV header: {header}")
    return [(int(g), int(n), int(r)) for g, n, r in reader]


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_CONFIG
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except SizeLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE_GUARD
    except (DatasetFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
