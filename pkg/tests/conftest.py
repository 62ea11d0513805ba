import itertools
import random
from collections import deque

import pytest

from robust_mst.graph import SimpleGraph


def bfs_connected(n, edges, s, t, removed=frozenset()):
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    seen = {s} | set(removed)
    queue = deque([s])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y == t:
                return True
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return False


def brute_min_separator_size(n, edges, s, t):
    """Smallest vertex set (excluding s, t) whose deletion separates s from t.

    Plain subset enumeration; s and t must be non-adjacent.
    """
    others = [v for v in range(n) if v not in (s, t)]
    for r in range(len(others) + 1):
        for removed in itertools.combinations(others, r):
            if not bfs_connected(n, edges, s, t, removed):
                return r
    raise AssertionError("adjacent endpoints cannot be separated")


def brute_connectivity(n, edges, s, t):
    """Menger count with the direct-edge-counts-as-one-path convention."""
    edges = {tuple(sorted(e)) for e in edges}
    e = tuple(sorted((s, t)))
    if e in edges:
        return 1 + brute_min_separator_size(n, edges - {e}, s, t)
    return brute_min_separator_size(n, edges, s, t)


def random_simple_graph(n, p, seed):
    rng = random.Random(seed)
    return SimpleGraph(
        n, frozenset(e for e in itertools.combinations(range(n), 2) if rng.random() < p)
    )


def cycle(n):
    return SimpleGraph(n, frozenset(tuple(sorted((i, (i + 1) % n))) for i in range(n)))


def complete(n):
    return SimpleGraph(n, frozenset(itertools.combinations(range(n), 2)))


def wheel(n):
    """Hub 0 joined to every vertex of the cycle 1..n-1."""
    rim = [tuple(sorted((i, i % (n - 1) + 1))) for i in range(1, n)]
    return SimpleGraph(n, frozenset(rim + [(0, i) for i in range(1, n)]))


@pytest.fixture
def c4():
    return cycle(4)


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
