"""Graph data model and the edge-list text format.

Vertices are dense integers ``0..n-1``.  An edge is a canonical tuple
``(u, v)`` with ``u < v``.  Weights are exact positive integers.

Text format::

    # comments start with '#'
    n m
    u v w        (m lines, 0 <= u < v < n, 1 <= w <= 2**63 - 1)
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from types import MappingProxyType

from .errors import DomainError, GraphFormatError

Edge = tuple[int, int]
EdgeSet = frozenset  # frozenset[Edge]; iterate via sorted_edges() for canonical order

MAX_WEIGHT = 2**63 - 1


def edge(u: int, v: int) -> Edge:
    """Canonical edge for the pair {u, v}."""
    if u == v:
        raise DomainError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


def sorted_edges(edges: Iterable[Edge]) -> list[Edge]:
    return sorted(edges)


def _check_vertex(n: int, v: int) -> None:
    if not 0 <= v < n:
        raise DomainError(f"vertex {v} out of range for n={n}")


@dataclass(frozen=True)
class SimpleGraph:
    """Unweighted simple undirected graph."""

    n: int
    edges: frozenset[Edge] = frozenset()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise DomainError("vertex count must be non-negative")
        canon = set()
        for u, v in self.edges:
            e = edge(u, v)
            _check_vertex(self.n, e[0])
            _check_vertex(self.n, e[1])
            canon.add(e)
        object.__setattr__(self, "edges", frozenset(canon))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> SimpleGraph:
        return cls(n, frozenset(edges))

    def adjacency(self) -> list[set[int]]:
        return _adjacency(self.n, self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return edge(u, v) in self.edges

    def with_edge(self, u: int, v: int) -> SimpleGraph:
        return SimpleGraph(self.n, self.edges | {edge(u, v)})

    def without_edge(self, u: int, v: int) -> SimpleGraph:
        return SimpleGraph(self.n, self.edges - {edge(u, v)})


@dataclass(frozen=True)
class WeightedGraph:
    """Immutable weighted simple graph.

    ``labels[i]`` is the original id of local vertex ``i``; it is the
    identity for parsed or generated graphs and tracks the original ids
    through :func:`induced_subgraph`.

    In strict mode every weight must be distinct.  In permissive mode ties
    are allowed and broken by ``(weight, u, v)``; ``tie_broken`` records
    whether any tie actually occurred.
    """

    n: int
    weights: Mapping[Edge, int]
    labels: tuple[int, ...] = ()
    strict: bool = True
    tie_broken: bool = field(default=False, init=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise DomainError("vertex count must be non-negative")
        canon: dict[Edge, int] = {}
        for (u, v), w in self.weights.items():
            e = edge(u, v)
            _check_vertex(self.n, e[0])
            _check_vertex(self.n, e[1])
            if e in canon:
                raise DomainError(f"duplicate edge {e[0]} {e[1]}")
            if isinstance(w, bool) or not isinstance(w, int):
                raise DomainError(f"weight of edge {e[0]} {e[1]} must be an integer")
            if not 1 <= w <= MAX_WEIGHT:
                raise DomainError(f"weight {w} of edge {e[0]} {e[1]} out of range")
            canon[e] = w
        distinct = len(set(canon.values())) == len(canon)
        if self.strict and not distinct:
            raise DomainError("edge weights are not distinct (strict mode)")
        labels = tuple(self.labels) if self.labels else tuple(range(self.n))
        if len(labels) != self.n:
            raise DomainError("labels must have one entry per vertex")
        object.__setattr__(self, "weights", MappingProxyType(dict(sorted(canon.items()))))
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "tie_broken", not distinct)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return (
            self.n == other.n
            and dict(self.weights) == dict(other.weights)
            and self.labels == other.labels
            and self.tie_broken == other.tie_broken
        )

    def __reduce__(self):
        # MappingProxyType does not pickle
        return (WeightedGraph, (self.n, dict(self.weights), self.labels, self.strict))

    def __hash__(self) -> int:
        return hash((self.n, tuple(self.weights.items()), self.labels))

    @property
    def edges(self) -> frozenset[Edge]:
        return frozenset(self.weights)

    @property
    def m(self) -> int:
        return len(self.weights)

    @property
    def complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def weight(self, u: int, v: int) -> int:
        return self.weights[edge(u, v)]

    def has_edge(self, u: int, v: int) -> bool:
        return edge(u, v) in self.weights

    def edges_by_weight(self) -> list[Edge]:
        """Edges in increasing ``(weight, u, v)`` order; a strict total order."""
        return sorted(self.weights, key=lambda e: (self.weights[e], e))

    def adjacency(self) -> list[set[int]]:
        return _adjacency(self.n, self.weights)

    def simple(self) -> SimpleGraph:
        return SimpleGraph(self.n, self.edges)

    def to_original(self, edges: Iterable[Edge]) -> frozenset[Edge]:
        """Map local edges to original vertex ids."""
        lab = self.labels
        return frozenset(edge(lab[u], lab[v]) for u, v in edges)


def _adjacency(n: int, edges: Iterable[Edge]) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def induced_subgraph(g: WeightedGraph, removed: Iterable[int]) -> WeightedGraph:
    """Subgraph induced by the vertices not in ``removed``, densely re-indexed.

    The result's ``labels`` map each surviving vertex back to its original id.
    """
    gone = set(removed)
    for v in gone:
        _check_vertex(g.n, v)
    if len(gone) >= g.n:
        raise DomainError("cannot remove every vertex")
    keep = [v for v in range(g.n) if v not in gone]
    index = {v: i for i, v in enumerate(keep)}
    weights = {
        (index[u], index[v]): w
        for (u, v), w in g.weights.items()
        if u in index and v in index
    }
    return WeightedGraph(
        len(keep), weights, labels=tuple(g.labels[v] for v in keep), strict=g.strict
    )


def _content_lines(text: str) -> Iterable[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def _parse_int(token: str, lineno: int, what: str) -> int:
    if not token.isdigit():
        raise GraphFormatError(f"{what} {token!r} is not a non-negative integer", lineno)
    return int(token)


def parse_graph(text: str | bytes, strict: bool = True) -> WeightedGraph:
    """Parse the edge-list format. Diagnostics carry the offending line number."""
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise GraphFormatError(f"input is not ASCII: {exc}") from None
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise GraphFormatError("missing 'n m' header") from None
    if len(header) != 2:
        raise GraphFormatError("header must be 'n m'", lineno)
    n = _parse_int(header[0], lineno, "vertex count")
    m = _parse_int(header[1], lineno, "edge count")

    weights: dict[Edge, int] = {}
    weight_line: dict[int, int] = {}
    count = 0
    for lineno, parts in lines:
        if len(parts) != 3:
            raise GraphFormatError("edge line must be 'u v w'", lineno)
        u = _parse_int(parts[0], lineno, "vertex")
        v = _parse_int(parts[1], lineno, "vertex")
        w = _parse_int(parts[2], lineno, "weight")
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        if u >= n or v >= n:
            raise GraphFormatError(f"vertex id {max(u, v)} >= n={n}", lineno)
        if not 1 <= w <= MAX_WEIGHT:
            raise GraphFormatError(f"weight {w} outside [1, 2^63-1]", lineno)
        e = edge(u, v)
        if e in weights:
            raise GraphFormatError(f"duplicate edge {e[0]} {e[1]}", lineno)
        if strict and w in weight_line:
            raise GraphFormatError(
                f"duplicate weight {w} (first used on line {weight_line[w]})", lineno
            )
        weights[e] = w
        weight_line.setdefault(w, lineno)
        count += 1
    if count != m:
        raise GraphFormatError(f"header declares {m} edges but {count} were given")
    return WeightedGraph(n, weights, strict=strict)


def serialize_graph(g: WeightedGraph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v} {w}" for (u, v), w in sorted(g.weights.items()))
    return "\n".join(out) + "\n"


def format_edges(edges: Iterable[Edge]) -> str:
    return "".join(f"{u} {v}\n" for u, v in sorted_edges(edges))
