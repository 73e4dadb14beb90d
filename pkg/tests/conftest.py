import itertools
import random

import pytest
from hypothesis import strategies as st

from hbhgraph import build_graph
from hbhgraph.fast import NONE

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def graphs(draw, min_n=0, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph([e for e, keep in zip(pairs, mask) if keep], n)


@st.composite
def bipartite_graphs(draw, max_n=10):
    """Triangle-free by construction: a random bipartite graph."""
    n = draw(st.integers(0, max_n))
    side = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    pairs = [(u, v) for u, v in itertools.combinations(range(n), 2) if side[u] != side[v]]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph([e for e, keep in zip(pairs, mask) if keep], n)


def random_graph(rng: random.Random, n: int, p: float):
    return build_graph([e for e in itertools.combinations(range(n), 2) if rng.random() < p], n)


def random_triangle_free(rng: random.Random, n: int, p: float):
    """Random triangle-free graph: add candidate edges in random order, skipping any that close a triangle."""
    pairs = list(itertools.combinations(range(n), 2))
    rng.shuffle(pairs)
    nb = [set() for _ in range(n)]
    for u, v in pairs:
        if rng.random() < p and not (nb[u] & nb[v]):
            nb[u].add(v)
            nb[v].add(u)
    return build_graph([(u, v) for u in range(n) for v in nb[u] if u < v], n)


def assert_u_forest(g, scan):
    """U out-degree is at most one by representation; check every edge is an upward domination."""
    out = scan.u.out
    assert len(out) == g.n
    for a, b in enumerate(out):
        if b != NONE:
            assert b > a
            assert g.rank_dominates(b, a)


@pytest.fixture
def acceptance_lines():
    return ACCEPTANCE_LINES
