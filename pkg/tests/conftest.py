from itertools import combinations

import pytest
from hypothesis import strategies as st

from strongdom import Graph, is_strong_dominating


def naive_minimum(g, predicate):
    """All subsets by size, checked with the definition-level predicate.

    Shares no code with the bitmask solvers; returns (size, lexicographically
    first optimal tuple).
    """
    for k in range(g.n + 1):
        for combo in combinations(range(g.n), k):
            if predicate(g, set(combo)):
                return k, combo
    raise AssertionError("unreachable")


def all_optimal_strong_sets(g):
    k, _ = naive_minimum(g, is_strong_dominating)
    return [set(c) for c in combinations(range(g.n), k) if is_strong_dominating(g, set(c))]


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def connected_graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        edges.add((draw(st.integers(0, v - 1)), v))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    extra = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges.update(e for e, keep in zip(pairs, extra) if keep)
    return Graph(n, sorted(edges))


@pytest.fixture
def tmp_graph_dir(tmp_path):
    return tmp_path


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS, key=lambda s: int(s.split("]")[1].split(".")[0])):
        terminalreporter.write_line(line)
