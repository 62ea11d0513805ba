"""Kruskal's MST and spanning-tree leaf utilities."""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable

from .errors import DisconnectedGraphError, DomainError
from .graph import Edge, WeightedGraph


class DisjointSets:
    """Union-find with path compression and union by rank."""

    def __init__(self, n: int) -> None:
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        """Merge the sets of ``a`` and ``b``; False if already merged."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        return True


def kruskal(n: int, edges_in_order: Iterable[Edge]) -> list[Edge]:
    """Accepted edges of a Kruskal scan over an already weight-ordered edge list."""
    sets = DisjointSets(n)
    accepted: list[Edge] = []
    for u, v in edges_in_order:
        if sets.union(u, v):
            accepted.append((u, v))
            if len(accepted) == n - 1:
                break
    return accepted


def mst(g: WeightedGraph) -> frozenset[Edge]:
    """Edge set of the unique minimum spanning tree of ``g``, in local ids."""
    tree = kruskal(g.n, g.edges_by_weight())
    if len(tree) != max(g.n - 1, 0):
        sets = DisjointSets(g.n)
        for u, v in tree:
            sets.union(u, v)
        u = next(x for x in range(g.n) if sets.find(x) != sets.find(0))
        raise DisconnectedGraphError(
            f"graph is disconnected: vertices {g.labels[0]} and {g.labels[u]} are not joined",
            g.labels[0],
            g.labels[u],
        )
    return frozenset(tree)


def _check_tree(n: int, edges: list[Edge]) -> None:
    if len(edges) != n - 1:
        raise DomainError(f"not a spanning tree: {len(edges)} edges on {n} vertices")
    sets = DisjointSets(n)
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise DomainError(f"not a spanning tree: bad edge {u} {v}")
        if not sets.union(u, v):
            raise DomainError(f"not a spanning tree: edge {u} {v} closes a cycle")


def mst_leaves(tree: Iterable[Edge], n: int) -> frozenset[int]:
    """Degree-1 vertices of a spanning tree on ``n`` vertices."""
    edges = list(tree)
    _check_tree(n, edges)
    degree = Counter(x for e in edges for x in e)
    return frozenset(x for x, d in degree.items() if d == 1)
