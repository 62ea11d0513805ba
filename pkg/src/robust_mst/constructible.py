"""k-constructible graphs: construction orders, maximal extension, weight
embedding, and k-minimality.

An edge order is a k-construction order when every edge, at the moment it is
added, joins two vertices that have at most k-1 internally vertex-disjoint
paths between them in the edges added before it.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable
from dataclasses import dataclass

from .connectivity import GraphLike, connectivity_from_adjacency
from .errors import DomainError, GraphFormatError
from .graph import Edge, SimpleGraph, WeightedGraph, _content_lines, _parse_int, edge


@dataclass(frozen=True)
class ConstructionOrder:
    k: int
    sequence: tuple[Edge, ...]
    host_n: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise DomainError("k must be at least 1")
        seen: set[Edge] = set()
        canon = []
        for u, v in self.sequence:
            if not (0 <= u < self.host_n and 0 <= v < self.host_n):
                raise DomainError(f"edge {u} {v} has a vertex outside 0..{self.host_n - 1}")
            e = edge(u, v)
            if e in seen:
                raise DomainError(f"duplicate edge {e[0]} {e[1]} in order")
            seen.add(e)
            canon.append(e)
        object.__setattr__(self, "sequence", tuple(canon))

    def graph(self) -> SimpleGraph:
        return SimpleGraph(self.host_n, frozenset(self.sequence))


@dataclass(frozen=True)
class OrderVerdict:
    valid: bool
    first_violation: int | None = None
    witness: int | None = None  # connectivity found at the violating index


def check_order(order: ConstructionOrder) -> OrderVerdict:
    """Check each prefix; ``first_violation`` is a 0-based index into the sequence."""
    k = order.k
    adj: list[set[int]] = [set() for _ in range(order.host_n)]
    for i, (u, v) in enumerate(order.sequence):
        c = connectivity_from_adjacency(adj, u, v, k)
        if c >= k:
            return OrderVerdict(False, i, c)
        adj[u].add(v)
        adj[v].add(u)
    return OrderVerdict(True)


def _require_valid(order: ConstructionOrder) -> None:
    verdict = check_order(order)
    if not verdict.valid:
        i = verdict.first_violation
        u, v = order.sequence[i]
        raise DomainError(
            f"not a {order.k}-construction order: edge #{i} ({u} {v}) joins "
            f"{verdict.witness}-connected vertices"
        )


def construction_order_for(g: SimpleGraph | WeightedGraph, k: int,
                           prefer: Iterable[Edge] | None = None) -> ConstructionOrder | None:
    """A k-construction order for ``g``, or None if ``g`` is not k-constructible.

    Works backwards: repeatedly delete an edge whose endpoints are at most
    (k-1)-connected once it is gone.  An edge that qualifies keeps
    qualifying as other edges are deleted, so the greedy choice never has to
    backtrack.  ``prefer`` is the edge order to favour; deletion sweeps it
    from the back, so a valid ``prefer`` order is returned unchanged.
    """
    adj = g.adjacency()
    remaining = list(prefer) if prefer is not None else sorted(g.edges)
    if frozenset(remaining) != g.edges or len(remaining) != len(g.edges):
        raise DomainError("preferred order must list each edge of the graph once")
    peeled: list[Edge] = []
    while remaining:
        kept: list[Edge] = []
        for u, v in reversed(remaining):
            adj[u].discard(v)
            adj[v].discard(u)
            if connectivity_from_adjacency(adj, u, v, k) <= k - 1:
                peeled.append((u, v))
            else:
                adj[u].add(v)
                adj[v].add(u)
                kept.append((u, v))
        if len(kept) == len(remaining):
            return None
        remaining = kept[::-1]
    return ConstructionOrder(k, tuple(reversed(peeled)), g.n)


def is_k_constructible(g: SimpleGraph | WeightedGraph, k: int) -> bool:
    return construction_order_for(g, k) is not None


def extend_maximal(
    g: SimpleGraph | WeightedGraph, k: int, order: ConstructionOrder
) -> tuple[SimpleGraph, ConstructionOrder]:
    """Grow ``g`` to an edge-maximal k-constructible graph.

    ``order`` must be a valid k-construction order whose edges are exactly
    those of ``g``.  Anti-edges are tried once each in lexicographic order.
    An anti-edge whose endpoints are at most (k-1)-connected is appended to
    the order as is.  Otherwise it is kept only if the enlarged graph still
    admits some construction order, which then replaces the current one.
    One pass suffices because a graph containing a non-constructible
    subgraph is itself not constructible.
    """
    if order.k != k or order.host_n != g.n or frozenset(order.sequence) != g.edges:
        raise DomainError("base order does not build the given graph with this k")
    _require_valid(order)
    n = g.n
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in order.sequence:
        adj[u].add(v)
        adj[v].add(u)
    sequence = list(order.sequence)
    for u, v in itertools.combinations(range(n), 2):
        if v in adj[u]:
            continue
        if connectivity_from_adjacency(adj, u, v, k) <= k - 1:
            sequence.append((u, v))
        else:
            trial = ConstructionOrder(k, (*sequence, (u, v)), n)
            reordered = construction_order_for(trial.graph(), k, prefer=trial.sequence)
            if reordered is None:
                continue
            sequence = list(reordered.sequence)
        adj[u].add(v)
        adj[v].add(u)
    result = ConstructionOrder(k, tuple(sequence), n)
    return result.graph(), result


def addable_anti_edges(g: GraphLike, k: int) -> list[Edge]:
    """Anti-edges whose endpoints are at most (k-1)-connected in ``g``."""
    adj = g.adjacency()
    return [
        (u, v)
        for u, v in itertools.combinations(range(g.n), 2)
        if v not in adj[u] and connectivity_from_adjacency(adj, u, v, k) <= k - 1
    ]


def embed_weights(order: ConstructionOrder) -> WeightedGraph:
    """Complete graph where the i-th order edge weighs i (1-based) and
    anti-edges follow in lexicographic order. Every order edge then lies in
    the k-cover of the result."""
    _require_valid(order)
    weights = {e: i for i, e in enumerate(order.sequence, start=1)}
    nxt = len(weights) + 1
    for e in itertools.combinations(range(order.host_n), 2):
        if e not in weights:
            weights[e] = nxt
            nxt += 1
    return WeightedGraph(order.host_n, weights)


def is_k_connected_pairwise(g: GraphLike, k: int) -> bool:
    adj = g.adjacency()
    return all(
        connectivity_from_adjacency(adj, u, v, k) >= k
        for u, v in itertools.combinations(range(g.n), 2)
    )


def is_k_minimal(g: GraphLike, k: int) -> bool:
    """k-connected, and deleting any edge breaks k-connectivity.

    After deleting ``{u, v}`` only the pair ``(u, v)`` itself needs checking.
    """
    if not is_k_connected_pairwise(g, k):
        return False
    adj = g.adjacency()
    for u in range(g.n):
        for v in sorted(adj[u]):
            if v < u:
                continue
            adj[u].discard(v)
            adj[v].discard(u)
            c = connectivity_from_adjacency(adj, u, v, k)
            adj[u].add(v)
            adj[v].add(u)
            if c >= k:
                return False
    return True


def parse_order(text: str | bytes) -> ConstructionOrder:
    """Order file: ``n k`` header then one ``u v`` line per edge, in order."""
    if isinstance(text, bytes):
        text = text.decode("ascii")
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise GraphFormatError("missing 'n k' header") from None
    if len(header) != 2:
        raise GraphFormatError("header must be 'n k'", lineno)
    n = _parse_int(header[0], lineno, "vertex count")
    k = _parse_int(header[1], lineno, "k")
    if k < 1:
        raise GraphFormatError("k must be at least 1", lineno)
    seq: list[Edge] = []
    seen: dict[Edge, int] = {}
    for lineno, parts in lines:
        if len(parts) != 2:
            raise GraphFormatError("order line must be 'u v'", lineno)
        u = _parse_int(parts[0], lineno, "vertex")
        v = _parse_int(parts[1], lineno, "vertex")
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        if u >= n or v >= n:
            raise GraphFormatError(f"vertex id {max(u, v)} >= n={n}", lineno)
        e = edge(u, v)
        if e in seen:
            raise GraphFormatError(f"duplicate edge {e[0]} {e[1]} (first on line {seen[e]})", lineno)
        seen[e] = lineno
        seq.append(e)
    return ConstructionOrder(k, tuple(seq), n)


def serialize_order(order: ConstructionOrder) -> str:
    return f"{order.host_n} {order.k}\n" + "".join(f"{u} {v}\n" for u, v in order.sequence)


def order_from_edges(n: int, k: int, edges: Iterable[tuple[int, int]]) -> ConstructionOrder:
    return ConstructionOrder(k, tuple(edges), n)
