"""The robust MST cover: union of MSTs over all (k-1)-vertex deletions.

Two independent routes compute the same edge set:

* :func:`mk_fast` scans edges by increasing weight and keeps an edge when
  its endpoints are at most (k-1)-connected in the edges kept so far.
* :func:`mk_brute` takes the definition literally and unions the MSTs of
  every induced subgraph on ``n - k + 1`` vertices.
"""

from __future__ import annotations

import itertools
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Literal

from .connectivity import connectivity_from_adjacency
from .errors import DisconnectedGraphError, DomainError, InvariantViolation, WorkLimitExceeded
from .graph import Edge, WeightedGraph, induced_subgraph
from .mst import mst

Method = Literal["fast", "brute"]

DEFAULT_WORK_LIMIT = 50_000_000


def edge_bound(n: int, k: int) -> int:
    """``n*k - C(k+1, 2)``."""
    return n * k - k * (k + 1) // 2


def gv_bound(n: int, k: int) -> int:
    """``ceil((1 + e/2) * k * n)``. Display only."""
    return math.ceil((1 + math.e / 2) * k * n)


@dataclass(frozen=True)
class CoverReport:
    k: int
    n: int
    cover: frozenset[Edge]
    order: tuple[Edge, ...]
    method: str
    elapsed: float = 0.0
    tie_broken: bool = False

    def __post_init__(self) -> None:
        if self.n >= self.k + 1 and self.cover_size > self.bound:
            raise InvariantViolation(
                f"cover of size {self.cover_size} exceeds bound {self.bound} "
                f"(n={self.n}, k={self.k}, method={self.method})"
            )

    @property
    def cover_size(self) -> int:
        return len(self.cover)

    @property
    def bound(self) -> int:
        return edge_bound(self.n, self.k)

    @property
    def gv_bound(self) -> int:
        return gv_bound(self.n, self.k)

    @property
    def tight(self) -> bool:
        return self.cover_size == self.bound

    def summary(self) -> str:
        return (
            f"k={self.k} size={self.cover_size} bound={self.bound} "
            f"tight={'yes' if self.tight else 'no'} method={self.method}"
        )


def _check_k(g: WeightedGraph, k: int) -> None:
    if not 1 <= k <= g.n - 1:
        raise DomainError(f"k={k} out of range: need 1 <= k <= n-1 = {g.n - 1}")


def _check_robustly_connected(
    g: WeightedGraph, k: int, cover_adj: list[set[int]]
) -> None:
    """Error if deleting some k-1 vertices disconnects a non-complete ``g``."""
    if g.complete:
        return
    full = g.adjacency()
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if v in full[u]:
                continue
            # pairs already k-connected in the cover are k-connected in g
            if connectivity_from_adjacency(cover_adj, u, v, k) >= k:
                continue
            if connectivity_from_adjacency(full, u, v, k) < k:
                raise DomainError(
                    f"deleting some {k - 1} vertices separates {u} and {v}; "
                    f"the cover is undefined for k={k}"
                )


def mk_fast(g: WeightedGraph, k: int) -> CoverReport:
    """Generalised Kruskal: O(m) connectivity queries each capped at k paths."""
    _check_k(g, k)
    start = time.perf_counter()
    adj: list[set[int]] = [set() for _ in range(g.n)]
    order: list[Edge] = []
    for u, v in g.edges_by_weight():
        if connectivity_from_adjacency(adj, u, v, k) <= k - 1:
            adj[u].add(v)
            adj[v].add(u)
            order.append((u, v))
    _check_robustly_connected(g, k, adj)
    return CoverReport(
        k, g.n, frozenset(order), tuple(order), "fast",
        time.perf_counter() - start, g.tie_broken,
    )


def _union_of_msts(g: WeightedGraph, subsets: list[tuple[int, ...]]) -> set[Edge]:
    local = {label: i for i, label in enumerate(g.labels)}
    union: set[Edge] = set()
    for removed in subsets:
        sub = induced_subgraph(g, removed)
        try:
            tree = mst(sub)
        except DisconnectedGraphError as exc:
            raise DomainError(
                f"deleting vertices {sorted(removed)} disconnects the graph: {exc}"
            ) from None
        for e in sub.to_original(tree):
            a, b = local[e[0]], local[e[1]]
            union.add((a, b) if a < b else (b, a))
    return union


def brute_work(g: WeightedGraph, k: int) -> int:
    return math.comb(g.n, k - 1) * max(g.m, 1)


def mk_brute(
    g: WeightedGraph,
    k: int,
    work_limit: int | None = DEFAULT_WORK_LIMIT,
    workers: int | None = None,
) -> CoverReport:
    """Union of ``MST(G[V - X])`` over every ``|X| = k-1``.

    ``work_limit`` bounds ``C(n, k-1) * m``; ``None`` disables the guard.
    With ``workers > 1`` the subsets are split across processes; the union
    is order-independent so the result matches the serial run exactly.
    """
    _check_k(g, k)
    work = brute_work(g, k)
    if work_limit is not None and work > work_limit:
        raise WorkLimitExceeded(
            f"brute force needs ~{work} edge-scans (limit {work_limit}); use the fast method"
        )
    start = time.perf_counter()
    subsets = list(itertools.combinations(range(g.n), k - 1))
    if workers and workers > 1 and len(subsets) > workers:
        chunks = [subsets[i::workers] for i in range(workers)]
        union: set[Edge] = set()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_union_of_msts, [g] * len(chunks), chunks):
                union |= part
    else:
        union = _union_of_msts(g, subsets)
    order = tuple(sorted(union, key=lambda e: (g.weights[e], e)))
    return CoverReport(
        k, g.n, frozenset(union), order, "brute",
        time.perf_counter() - start, g.tie_broken,
    )


def compute_mk(g: WeightedGraph, k: int, method: Method = "fast", **kwargs) -> CoverReport:
    if method == "fast":
        return mk_fast(g, k)
    if method == "brute":
        return mk_brute(g, k, **kwargs)
    raise DomainError(f"unknown method {method!r}")


def check_monotone(g: WeightedGraph, k: int, method: Method = "fast", **kwargs) -> bool:
    """Whether the k-cover is contained in the (k+1)-cover."""
    if not 1 <= k <= g.n - 2:
        raise DomainError(f"k={k} out of range: need 1 <= k <= n-2 = {g.n - 2}")
    return compute_mk(g, k, method, **kwargs).cover <= compute_mk(g, k + 1, method, **kwargs).cover
