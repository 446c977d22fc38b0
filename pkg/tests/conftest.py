import random

import pytest

from ehlab.core import Colouring, pairs
from ehlab.patterns import DOUBLE_P4, RAINBOW3, TWO_ONE


def random_colouring(rnd: random.Random, n: int, s: int) -> Colouring:
    return Colouring(n, s, tuple(rnd.randint(1, s) for _ in pairs(n)))


def random_graph(rnd: random.Random, n: int, p: float = 0.5) -> list[int]:
    adj = [0] * n
    for u, v in pairs(n):
        if rnd.random() < p:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return adj


@pytest.fixture
def rainbow3():
    return RAINBOW3


@pytest.fixture
def double_p4():
    return DOUBLE_P4


@pytest.fixture
def two_one():
    return TWO_ONE


# one (number, line) entry per acceptance criterion, printed after the run
ACCEPTANCE = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[ACCEPTANCE] = []


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
