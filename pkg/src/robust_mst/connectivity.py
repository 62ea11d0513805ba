"""Local vertex connectivity and minimum vertex separators.

Both queries run unit-capacity augmenting paths on the vertex-split digraph:
every vertex ``x`` other than ``s`` and ``t`` becomes ``x_in -> x_out`` with
capacity 1, and every undirected edge ``{a, b}`` becomes the arcs
``a_out -> b_in`` and ``b_out -> a_in``.  The split digraph is never
materialised.  Flow state is two arrays, ``into[x]`` and ``outof[x]``,
giving the flow-carrying predecessor and successor of each used vertex.
Edge arcs are treated as uncapacitated.  That does not change the flow
value, because every internal vertex passes at most one unit.  It does mean
the residual-reachability cut consists of split arcs only, so it reads off
directly as a vertex separator.

Node encoding inside the search: ``2 * x`` is ``x_in`` and ``2 * x + 1`` is
``x_out``.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Protocol

from .errors import DomainError

UNUSED = -1


class GraphLike(Protocol):
    n: int

    def adjacency(self) -> list[set[int]]: ...


@dataclass(frozen=True)
class SeparatorCertificate:
    s: int
    t: int
    separator: frozenset[int]
    paths_found: int


class FlowState:
    """Scratch state for one s-t query over a fixed adjacency structure.

    ``adj`` may be any sequence of neighbour collections; it is read, never
    modified.  If ``skip_direct`` is set the edge ``{s, t}`` is ignored.
    """

    def __init__(
        self, adj: Sequence, s: int, t: int, skip_direct: bool = False
    ) -> None:
        self.adj = adj
        self.s = s
        self.t = t
        self.skip_direct = skip_direct
        self.into: dict[int, int] = {}
        self.outof: dict[int, int] = {}
        self.flow = 0

    def _search(self, stop_at_sink: bool = True) -> dict[int, int]:
        """BFS over the residual graph from ``s_out``; returns parent map."""
        adj, s, t = self.adj, self.s, self.t
        into, skip = self.into, self.skip_direct
        start = 2 * s + 1
        sink = 2 * t
        parent = {start: start}
        queue = deque([start])
        while queue:
            node = queue.popleft()
            x = node >> 1
            if node & 1:
                # x_out: forward edge arcs to every neighbour's in-node
                for b in adj[x]:
                    if b == s or (skip and x == s and b == t):
                        continue
                    nb = 2 * b
                    if nb not in parent:
                        parent[nb] = node
                        if nb == sink and stop_at_sink:
                            return parent
                        queue.append(nb)
                # reverse of the saturated split arc
                if x != s and x in into:
                    nb = 2 * x
                    if nb not in parent:
                        parent[nb] = node
                        queue.append(nb)
            else:
                # x_in, x internal (s_in is never entered, t_in is terminal)
                if x == t:
                    continue
                a = into.get(x, UNUSED)
                if a == UNUSED:
                    nb = 2 * x + 1
                else:
                    if a == s:
                        continue
                    nb = 2 * a + 1
                if nb not in parent:
                    parent[nb] = node
                    queue.append(nb)
        return parent

    def augment(self) -> bool:
        parent = self._search()
        sink = 2 * self.t
        if sink not in parent:
            return False
        path = [sink]
        while path[-1] != parent[path[-1]]:
            path.append(parent[path[-1]])
        path.reverse()
        s, t = self.s, self.t
        into, outof = self.into, self.outof
        for prev, node in zip(path, path[1:]):
            x, y = prev >> 1, node >> 1
            if x == y:
                # split arc, forward or reverse; neighbouring steps fix state
                continue
            if prev & 1:
                # x_out -> y_in: push flow on edge x -> y
                if y != t:
                    into[y] = x
                if x != s:
                    outof[x] = y
            else:
                # x_in -> y_out: cancel flow on edge y -> x
                if into.get(x) == y:
                    del into[x]
                if outof.get(y) == x:
                    del outof[y]
        self.flow += 1
        return True

    def run(self, cap: int) -> int:
        while self.flow < cap and self.augment():
            pass
        return self.flow

    def residual_reachable(self) -> set[int]:
        return set(self._search(stop_at_sink=False))


def _validate(n: int, s: int, t: int) -> None:
    for v in (s, t):
        if not 0 <= v < n:
            raise DomainError(f"vertex {v} out of range for n={n}")
    if s == t:
        raise DomainError("s and t must differ")


def connectivity_from_adjacency(adj: Sequence, s: int, t: int, cap: int) -> int:
    """Core of :func:`local_connectivity` over a prebuilt adjacency list."""
    if cap <= 0:
        return 0
    if t in adj[s]:
        return 1 + FlowState(adj, s, t, skip_direct=True).run(cap - 1)
    # cheap degree bound: s or t with fewer than cap neighbours
    bound = min(len(adj[s]), len(adj[t]), cap)
    return FlowState(adj, s, t).run(bound)


def local_connectivity(g: GraphLike, s: int, t: int, cap: int | None = None) -> int:
    """``min(cap, number of internally vertex-disjoint s-t paths)``.

    An edge ``{s, t}`` counts as one path. The search stops after ``cap``
    augmenting paths. ``cap=None`` means no cap.
    """
    _validate(g.n, s, t)
    if cap is None:
        cap = g.n
    if cap < 1:
        raise DomainError("cap must be at least 1")
    return connectivity_from_adjacency(g.adjacency(), s, t, cap)


def min_separator(g: GraphLike, s: int, t: int) -> SeparatorCertificate:
    """Minimum vertex set separating non-adjacent ``s`` and ``t``."""
    _validate(g.n, s, t)
    adj = g.adjacency()
    if t in adj[s]:
        raise DomainError(f"vertices {s} and {t} are adjacent; no vertex separator exists")
    state = FlowState(adj, s, t)
    flow = state.run(g.n)
    reach = state.residual_reachable()
    separator = frozenset(
        x for x in range(g.n) if 2 * x in reach and 2 * x + 1 not in reach and x not in (s, t)
    )
    return SeparatorCertificate(s, t, separator, flow)


def separates(g: GraphLike, s: int, t: int, removed: set[int] | frozenset[int]) -> bool:
    """True if deleting ``removed`` leaves no s-t path (plain BFS)."""
    adj = g.adjacency()
    seen = {s} | set(removed)
    queue = deque([s])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y == t:
                return False
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return True
