from __future__ import annotations

import random
from itertools import combinations

import pytest

from hyperkmax import Hypergraph


def random_hypergraph(rng: random.Random, n: int, r: int, density: float) -> Hypergraph:
    edges = [c for c in combinations(range(n), r) if rng.random() < density]
    return Hypergraph.from_edges(n, r, edges)


def as_sets(h: Hypergraph) -> list[frozenset[int]]:
    return [frozenset(e) for e in h.edges]


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def acceptance(request):
    """Append one PASS/FAIL line for the calling criterion."""
    lines = request.config.stash.setdefault(ACCEPTANCE, [])

    def record(label: str, ok: bool, detail: str, elapsed: float, limit: float) -> None:
        within = elapsed <= limit
        status = "PASS" if ok and within else "FAIL"
        timing = f"{elapsed:.1f}s of {limit:g}s" + ("" if within else " OVER BUDGET")
        lines.append(f"{status} {label}: {detail} [{timing}]")

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
