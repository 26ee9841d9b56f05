from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from isolationlab.graph import Graph, is_connected


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8, connected: bool = False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = Graph.from_edges(n, [p for p, b in zip(pairs, bits) if b])
    if connected and not is_connected(g):
        # chain the components so the draw still shrinks well
        extra = [(i, i + 1) for i in range(n - 1) if not g.has_edge(i, i + 1)]
        g = Graph.from_edges(n, g.edges() + extra)
    return g


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_perm(rng: random.Random, n: int) -> list[int]:
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


# one summary line per acceptance criterion, printed after the run

def pytest_configure(config):
    config._acceptance_lines = []


@pytest.fixture
def acceptance_log(request):
    return request.config._acceptance_lines


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
