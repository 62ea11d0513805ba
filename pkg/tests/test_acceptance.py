"""Exit criteria. Each test appends one PASS/FAIL line to the terminal summary."""

import io
import itertools
import random
import statistics
import sys
import time

import pytest

from robust_mst.cli import run
from robust_mst.connectivity import local_connectivity
from robust_mst.constructible import ConstructionOrder, check_order, embed_weights, is_k_minimal
from robust_mst.cover import edge_bound, mk_brute, mk_fast
from robust_mst.generators import fixture_c4, gen_random_complete, gen_random_order, gen_tight
from robust_mst.graph import SimpleGraph, edge, induced_subgraph, serialize_graph
from robust_mst.mst import mst, mst_leaves

from conftest import brute_min_separator_size, complete, cycle, random_simple_graph, wheel

SMALL_N = range(4, 9)
SEEDS_PER_N = 40  # 5 sizes x 40 = 200 graphs
LARGE_N = 200
LARGE_K = (2, 3, 5)


@pytest.fixture
def record(acceptance_log, request):
    name = request.node.name.removeprefix("test_")

    def _record(ok, detail):
        acceptance_log.append(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
        assert ok, detail

    return _record


@pytest.fixture(scope="module")
def small_suite():
    """Fast and brute covers for every (n, k, seed) of the small corpus."""
    rows = []
    t0 = time.perf_counter()
    for n in SMALL_N:
        for seed in range(SEEDS_PER_N):
            g = gen_random_complete(n, seed)
            for k in range(1, n):
                rows.append((g, k, mk_fast(g, k), mk_brute(g, k, work_limit=None)))
    return rows, time.perf_counter() - t0


@pytest.fixture(scope="module")
def large_suite():
    g = gen_random_complete(LARGE_N, 0)
    out = {}
    for k in LARGE_K:
        t0 = time.perf_counter()
        rep = mk_fast(g, k)
        out[k] = (rep, time.perf_counter() - t0)
    return g, out


def test_c4_fixture(record, monkeypatch):
    g = fixture_c4()
    cycle_edges = {(0, 1), (1, 2), (2, 3), (0, 3)}
    out = io.StringIO()
    monkeypatch.setattr(sys, "stdin", io.TextIOWrapper(io.BytesIO(serialize_graph(g).encode())))
    code = run(["compute-mk", "--k", "2", "--method", "both"], out=out)
    timings = {}
    for method in (mk_fast, mk_brute):
        samples = []
        for _ in range(25):
            t0 = time.perf_counter()
            rep = method(g, 2)
            samples.append(time.perf_counter() - t0)
            assert rep.cover == cycle_edges and rep.cover_size == 4 and rep.bound == 5
        timings[rep.method] = statistics.median(samples)
    ok = (
        code == 0
        and out.getvalue().splitlines()[-1] == "k=2 size=4 bound=5 tight=no method=both"
        and all(t < 1e-3 for t in timings.values())
    )
    record(ok, "cover=C4 size=4 bound=5 "
           + " ".join(f"{m}={t * 1e6:.0f}us" for m, t in timings.items()) + " (limit 1ms)")


def test_oracle_equivalence(record, small_suite):
    rows, elapsed = small_suite
    graphs = len({(g.n, id(g)) for g, *_ in rows})
    mismatches = [(g.n, k) for g, k, fast, brute in rows if fast.cover != brute.cover]
    ok = not mismatches and graphs >= 200 and elapsed < 120
    record(ok, f"graphs={graphs} cases={len(rows)} mismatches={len(mismatches)} "
           f"elapsed={elapsed:.1f}s (limit 120s)")


def test_edge_bound(record, small_suite, large_suite):
    rows, _ = small_suite
    violations = [
        (g.n, k) for g, k, fast, brute in rows
        for rep in (fast, brute) if rep.cover_size > edge_bound(g.n, k)
    ]
    _, large = large_suite
    violations += [(LARGE_N, k) for k, (rep, _) in large.items() if rep.cover_size > edge_bound(LARGE_N, k)]
    t5 = large[5][1]
    sizes = " ".join(f"k={k}:{rep.cover_size}/{rep.bound}" for k, (rep, _) in large.items())
    record(not violations and t5 < 60,
           f"violations={len(violations)} n=200 {sizes} k=5 time={t5:.1f}s (limit 60s)")


TIGHT_CASES = [(4, 2), (6, 3), (7, 3), (8, 4)] + [(k + 1, k) for k in range(1, 8)]


def test_tightness(record):
    bad = []
    for n, k in TIGHT_CASES:
        for seed in range(3):
            g = gen_tight(n, k, seed)
            fast = mk_fast(g, k)
            if fast.cover_size != edge_bound(n, k):
                bad.append((n, k, seed, "fast"))
            if n <= 8 and mk_brute(g, k).cover != fast.cover:
                bad.append((n, k, seed, "brute"))
    record(not bad, f"cases={len(TIGHT_CASES)}x3 seeds, non-tight={bad}")


def test_monotonicity(record, small_suite):
    rows, _ = small_suite
    by_graph = {}
    for g, k, fast, _ in rows:
        by_graph.setdefault(id(g), (g, {}))[1][k] = fast.cover
    failures = 0
    for g, covers in by_graph.values():
        if covers[1] != mst(g):
            failures += 1
        failures += sum(not covers[k] <= covers[k + 1] for k in range(1, g.n - 1))
    record(failures == 0, f"graphs={len(by_graph)} failures={failures} (includes M_1 == MST)")


def test_fast_output_is_construction_order(record, small_suite, large_suite):
    rows, _ = small_suite
    bad = [(g.n, k) for g, k, fast, _ in rows
           if not check_order(ConstructionOrder(k, fast.order, g.n)).valid]
    _, large = large_suite
    for k, (rep, _) in large.items():
        if not check_order(ConstructionOrder(k, rep.order, LARGE_N)).valid:
            bad.append((LARGE_N, k))
    record(not bad, f"orders checked={len(rows) + len(large)} invalid={len(bad)}")


def test_embedded_orders_in_cover(record):
    checked, missing = 0, []
    for seed in range(60):
        n = 3 + seed % 5  # 3..7
        k = 1 + seed % min(3, n - 1)
        order = gen_random_order(n, k, seed)
        cover = mk_brute(embed_weights(order), k).cover
        checked += 1
        if not set(order.sequence) <= cover:
            missing.append(seed)
    record(checked >= 50 and not missing, f"orders={checked} failures={missing}")


def test_menger(record):
    pairs = mismatches = 0
    for n in range(3, 9):
        for i in range(10):
            g = random_simple_graph(n, (0.3, 0.5, 0.7)[i % 3], seed=7919 * n + i)
            for s, t in itertools.combinations(range(n), 2):
                if g.has_edge(s, t):
                    continue
                pairs += 1
                if local_connectivity(g, s, t) != brute_min_separator_size(n, g.edges, s, t):
                    mismatches += 1
    record(mismatches == 0 and pairs > 0, f"non-adjacent pairs={pairs} mismatches={mismatches}")


def _k33():
    return SimpleGraph(6, frozenset((a, b) for a in range(3) for b in range(3, 6)))


def test_mader_cross_check(record):
    curated = [(cycle(n), 2) for n in range(3, 9)]
    curated += [(complete(k + 1), k) for k in range(1, 7)]
    curated += [(wheel(n), 3) for n in range(5, 9)]
    curated += [(_k33(), 3)]
    rng = random.Random(6)
    problems = []
    for g, k in curated:
        if not is_k_minimal(g, k):
            problems.append((g.n, k, "not minimal"))
            continue
        if len(g.edges) > edge_bound(g.n, k):
            problems.append((g.n, k, "bound"))
        edges = sorted(g.edges)
        for _ in range(20):
            rng.shuffle(edges)
            if not check_order(ConstructionOrder(k, tuple(edges), g.n)).valid:
                problems.append((g.n, k, "order"))
                break
    record(not problems, f"graphs={len(curated)} x 20 permutations problems={problems}")


def test_leaf_deletion(record):
    leaves = failures = 0
    for seed in range(100):
        n = 3 + seed % 8  # 3..10
        g = gen_random_complete(n, 10_000 + seed)
        tree = mst(g)
        for v in mst_leaves(tree, n):
            leaves += 1
            (u,) = [x for e in tree if v in e for x in e if x != v]
            sub = induced_subgraph(g, {v})
            if sub.to_original(mst(sub)) != tree - {edge(u, v)}:
                failures += 1
    record(failures == 0, f"graphs=100 leaves={leaves} failures={failures}")
