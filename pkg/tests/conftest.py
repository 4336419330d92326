from __future__ import annotations

import os
import sys
from pathlib import Path

import pytest

from rolekit.datasets import make_figure1_pair
from rolekit.graph import disjoint_union


def dataset_dir(prefix: str) -> Path | None:
    """Locate a TUDataset directory for `prefix` under $ROLEKIT_DATA_DIR or
    tests/data; None when the dataset is not available."""
    roots = []
    env = os.environ.get("ROLEKIT_DATA_DIR")
    if env:
        roots.append(Path(env))
    roots.append(Path(__file__).parent / "data")
    for root in roots:
        candidate = root / prefix
        if (candidate / f"{prefix}_A.txt").exists():
            return candidate
    return None


def require_dataset(prefix: str) -> Path:
    directory = dataset_dir(prefix)
    if directory is None:
        pytest.skip(
            f"{prefix} TUDataset files not available (place them under "
            f"$ROLEKIT_DATA_DIR/{prefix} or tests/data/{prefix})"
        )
    return directory


@pytest.fixture
def figure1_pair():
    return make_figure1_pair()


@pytest.fixture
def figure1_union(figure1_pair):
    return disjoint_union(figure1_pair)


def pytest_runtest_logreport(report):
    # one visible pass/fail line per acceptance criterion
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.skipped:
        reason = report.longrepr[2] if isinstance(report.longrepr, tuple) else ""
        sys.stderr.write(f"[acceptance] {name}: SKIP ({reason})\n")
    elif report.when == "call":
        status = "PASS" if report.passed else "FAIL"
        sys.stderr.write(f"[acceptance] {name}: {status}\n")
