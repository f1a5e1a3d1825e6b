import itertools
import random
import sys

import pytest

from poscodeg.hypergraph import RGraph


def random_graph(rng: random.Random, n: int, r: int = 3, p: float = 0.5) -> RGraph:
    return RGraph(r, n, [e for e in itertools.combinations(range(n), r) if rng.random() < p])


@pytest.fixture
def rng():
    return random.Random(20240601)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
