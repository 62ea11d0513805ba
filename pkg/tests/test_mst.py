import random
from collections import Counter

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from robust_mst.errors import DisconnectedGraphError, DomainError
from robust_mst.generators import fixture_c4, gen_random_complete
from robust_mst.graph import WeightedGraph, edge, induced_subgraph
from robust_mst.mst import DisjointSets, kruskal, mst, mst_leaves


def test_disjoint_sets():
    ds = DisjointSets(5)
    assert ds.union(0, 1) and ds.union(3, 4)
    assert not ds.union(1, 0)
    assert ds.find(0) == ds.find(1) != ds.find(3)
    assert ds.find(ds.find(4)) == ds.find(4)
    ds.union(1, 4)
    assert len({ds.find(v) for v in range(5)}) == 2


def test_k3():
    g = WeightedGraph(3, {(0, 1): 1, (0, 2): 2, (1, 2): 3})
    assert mst(g) == {(0, 1), (0, 2)}


def test_c4_fixture_mst():
    # Kruskal by hand: weights 1, 2, 3 are acyclic; 4 closes the cycle.
    assert mst(fixture_c4()) == {(0, 1), (1, 2), (2, 3)}


def test_single_edge():
    assert mst(WeightedGraph(2, {(0, 1): 9})) == {(0, 1)}


def test_disconnected_names_vertices():
    g = WeightedGraph(4, {(0, 1): 1, (2, 3): 2})
    with pytest.raises(DisconnectedGraphError) as info:
        mst(g)
    assert {info.value.u, info.value.v} == {0, 2}


def test_disconnected_reports_original_ids():
    g = WeightedGraph(4, {(0, 1): 1, (1, 2): 2, (2, 3): 3})
    with pytest.raises(DisconnectedGraphError) as info:
        mst(induced_subgraph(g, {2}))
    assert {info.value.u, info.value.v} == {0, 3}


def test_leaves_path_and_star():
    assert mst_leaves([(0, 1), (1, 2), (2, 3)], 4) == {0, 3}
    assert mst_leaves([(0, i) for i in range(1, 5)], 5) == {1, 2, 3, 4}


@pytest.mark.parametrize(
    "edges, n",
    [([(0, 1), (1, 2), (0, 2)], 4), ([(0, 1), (2, 3)], 4), ([(0, 1)], 3)],
)
def test_leaves_reject_non_trees(edges, n):
    with pytest.raises(DomainError):
        mst_leaves(edges, n)


@pytest.mark.parametrize("seed", range(10))
def test_leaves_random_tree_by_degree_count(seed):
    rng = random.Random(seed)
    tree = [edge(v, rng.randrange(v)) for v in range(1, 8)]
    degree = Counter(x for e in tree for x in e)
    assert mst_leaves(tree, 8) == {v for v in range(8) if degree[v] == 1}


@settings(max_examples=60, deadline=None)
@given(n=st.integers(2, 15), seed=st.integers(0, 2**32))
def test_matches_networkx(n, seed):
    g = gen_random_complete(n, seed)
    nxg = nx.Graph()
    nxg.add_weighted_edges_from((u, v, w) for (u, v), w in g.weights.items())
    expected = {edge(u, v) for u, v in nx.minimum_spanning_edges(nxg, algorithm="prim", data=False)}
    assert mst(g) == expected


@settings(max_examples=40, deadline=None)
@given(n=st.integers(2, 12), seed=st.integers(0, 2**32), shuffle=st.randoms())
def test_candidate_order_irrelevant(n, seed, shuffle):
    g = gen_random_complete(n, seed)
    edges = list(g.weights)
    shuffle.shuffle(edges)
    resorted = sorted(edges, key=lambda e: g.weights[e])
    assert frozenset(kruskal(n, resorted)) == mst(g)


@settings(max_examples=40, deadline=None)
@given(n=st.integers(2, 12), seed=st.integers(0, 2**32))
def test_cheapest_edge_in_mst(n, seed):
    g = gen_random_complete(n, seed)
    assert min(g.weights, key=g.weights.get) in mst(g)


@pytest.mark.parametrize("seed", range(100))
def test_leaf_deletion_law(seed):
    n = 3 + seed % 8
    g = gen_random_complete(n, seed)
    tree = mst(g)
    for v in mst_leaves(tree, n):
        (u,) = [x for e in tree if v in e for x in e if x != v]
        smaller = induced_subgraph(g, {v})
        assert smaller.to_original(mst(smaller)) == tree - {edge(u, v)}
