"""Seeded instance generators.

Randomness comes from :class:`random.Random` (Mersenne Twister) seeded with
the integer seed; integer seeding is stable across platforms and Python
versions, so generated corpora are reproducible bit for bit.
"""

from __future__ import annotations

import itertools
import random

from .connectivity import connectivity_from_adjacency
from .constructible import ConstructionOrder
from .errors import DomainError
from .graph import Edge, WeightedGraph

MAX_SEED = 2**64 - 1


def _rng(seed: int) -> random.Random:
    if not 0 <= seed <= MAX_SEED:
        raise DomainError(f"seed {seed} is not a 64-bit unsigned integer")
    return random.Random(seed)


def complete_edges(n: int) -> list[Edge]:
    return list(itertools.combinations(range(n), 2))


def gen_random_complete(n: int, seed: int) -> WeightedGraph:
    """Complete graph whose weights are a seeded permutation of 1..n(n-1)/2."""
    if n < 2:
        raise DomainError("need n >= 2")
    edges = complete_edges(n)
    weights = list(range(1, len(edges) + 1))
    _rng(seed).shuffle(weights)
    return WeightedGraph(n, dict(zip(edges, weights)))


def gen_tight(n: int, k: int, seed: int = 0) -> WeightedGraph:
    """Complete graph whose k-cover has exactly ``n*k - C(k+1, 2)`` edges.

    With ``core = {0..k-1}``, edges inside the core are cheapest, then edges
    with one endpoint in the core, then the rest.  The seed only permutes
    weights within each class.
    """
    if not 1 <= k <= n - 1:
        raise DomainError(f"need 1 <= k <= n-1, got n={n} k={k}")
    rng = _rng(seed)
    classes: list[list[Edge]] = [[], [], []]
    for u, v in complete_edges(n):
        classes[2 - ((u < k) + (v < k))].append((u, v))
    weights: dict[Edge, int] = {}
    next_weight = 1
    for cls in classes:
        values = list(range(next_weight, next_weight + len(cls)))
        rng.shuffle(values)
        weights.update(zip(cls, values))
        next_weight += len(cls)
    return WeightedGraph(n, weights)


def fixture_c4() -> WeightedGraph:
    """K4 with the 4-cycle 0-1-2-3 weighted 1..4 and the diagonals 5, 6."""
    return WeightedGraph(
        4, {(0, 1): 1, (1, 2): 2, (2, 3): 3, (0, 3): 4, (0, 2): 5, (1, 3): 6}
    )


def gen_random_order(
    n: int, k: int, seed: int, length: int | None = None
) -> ConstructionOrder:
    """Random valid k-construction order on ``n`` vertices.

    Pairs are visited in a seeded random order and admitted whenever their
    endpoints are at most (k-1)-connected in the edges admitted so far.
    ``length`` truncates the result; by default the seed picks a length.
    """
    if n < 2 or k < 1:
        raise DomainError(f"need n >= 2 and k >= 1, got n={n} k={k}")
    rng = _rng(seed)
    pairs = complete_edges(n)
    rng.shuffle(pairs)
    adj: list[set[int]] = [set() for _ in range(n)]
    seq: list[Edge] = []
    for u, v in pairs:
        if connectivity_from_adjacency(adj, u, v, k) <= k - 1:
            adj[u].add(v)
            adj[v].add(u)
            seq.append((u, v))
    if length is None:
        length = rng.randint(1, len(seq))
    return ConstructionOrder(k, tuple(seq[:length]), n)
