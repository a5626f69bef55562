import random

import pytest
from hypothesis import HealthCheck, settings

from hypersat import Hypergraph, Graph

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_hypergraph(rng: random.Random, n: int, r: int, p: float = 0.5) -> Hypergraph:
    from itertools import combinations

    return Hypergraph(r, n, tuple(e for e in combinations(range(n), r) if rng.random() < p))


@pytest.fixture
def rng():
    return random.Random(20240611)
