"""Batch verification of the cover theory over seeded instance corpora.

Each row of the report is one vertex count ``n``; each column is one check:

equivalence  fast cover == brute cover (brute-force sizes only)
bound        cover size <= n*k - C(k+1, 2)
monotone     M_1 == MST and M_1 <= M_2 <= ... <= M_{n-1}
order        fast output in weight order is a valid k-construction order
embed        order edges lie in the brute cover of the embedded weights
tight        the tight generator meets the bound exactly
"""

from __future__ import annotations

import time
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

from .constructible import ConstructionOrder, check_order, embed_weights
from .cover import CoverReport, edge_bound, mk_brute, mk_fast
from .errors import InvariantViolation, WorkLimitExceeded
from .generators import gen_random_complete, gen_random_order, gen_tight
from .mst import mst

CHECKS = ("equivalence", "bound", "monotone", "order", "embed", "tight")

PASS, FAIL, SKIP, ABORT = "pass", "fail", "skip", "abort"


@dataclass
class Cell:
    status: str = PASS
    runs: int = 0
    detail: str = ""

    def fail(self, detail: str) -> None:
        if self.status != FAIL:
            self.status = FAIL
            self.detail = detail

    def abort(self, detail: str) -> None:
        if self.status == PASS:
            self.status = ABORT
            self.detail = detail


@dataclass
class SuiteReport:
    rows: dict[int, dict[str, Cell]] = field(default_factory=dict)
    graphs: int = 0
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for row in self.rows.values() for c in row.values())

    def lines(self) -> list[str]:
        out = []
        for n, row in sorted(self.rows.items()):
            cells = " ".join(f"{name}={row[name].status}" for name in CHECKS)
            out.append(f"n={n} {cells}")
            for name in CHECKS:
                if row[name].detail:
                    out.append(f"  {name}: {row[name].detail}")
        out.append(f"graphs={self.graphs} result={'pass' if self.ok else 'fail'}")
        return out


def verify_suite(
    n_values: Sequence[int] = (4, 5, 6, 7, 8),
    seeds: Sequence[int] = range(40),
    k_values: Sequence[int] | None = None,
    brute_max_n: int = 8,
    embed_max_n: int = 7,
    embed_max_k: int = 3,
    work_limit: int | None = None,
    fast: Callable[..., CoverReport] = mk_fast,
) -> SuiteReport:
    """Run every check for every ``n`` and seed.

    ``k_values`` restricts k (values outside 1..n-1 are dropped); by default
    every k is used.  ``fast`` is injectable so that a deliberately broken
    implementation can be shown to fail the suite.
    """
    report = SuiteReport()
    t0 = time.perf_counter()
    for n in n_values:
        row = {name: Cell() for name in CHECKS}
        report.rows[n] = row
        ks = [k for k in (k_values or range(1, n)) if 1 <= k <= n - 1]
        use_brute = n <= brute_max_n
        if not use_brute:
            row["equivalence"].status = SKIP
            row["equivalence"].detail = f"n > {brute_max_n}, brute force skipped"
        for seed in seeds:
            g = gen_random_complete(n, seed)
            report.graphs += 1
            covers: dict[int, CoverReport] = {}
            for k in ks:
                try:
                    rep = fast(g, k)
                except InvariantViolation as exc:
                    row["bound"].fail(f"seed={seed} k={k}: {exc}")
                    continue
                covers[k] = rep
                row["bound"].runs += 1
                if rep.cover_size > edge_bound(n, k):
                    row["bound"].fail(f"seed={seed} k={k} size={rep.cover_size}")
                verdict = check_order(ConstructionOrder(k, rep.order, n))
                row["order"].runs += 1
                if not verdict.valid:
                    row["order"].fail(f"seed={seed} k={k} index={verdict.first_violation}")
                if use_brute:
                    try:
                        brute = mk_brute(g, k, work_limit=work_limit)
                    except WorkLimitExceeded as exc:
                        row["equivalence"].abort(str(exc))
                    except InvariantViolation as exc:
                        row["equivalence"].fail(f"seed={seed} k={k}: {exc}")
                    else:
                        row["equivalence"].runs += 1
                        if brute.cover != rep.cover:
                            row["equivalence"].fail(
                                f"seed={seed} k={k} fast={rep.cover_size} brute={brute.cover_size}"
                            )
            _check_monotone(row["monotone"], g, covers, seed)
            if use_brute and n <= embed_max_n:
                _check_embed(row["embed"], n, min(embed_max_k, n - 1), seed, work_limit)
        if row["embed"].runs == 0 and row["embed"].status == PASS:
            row["embed"].status = SKIP
        _check_tight(row["tight"], n, ks, seeds[:3] if len(seeds) > 3 else seeds,
                     use_brute, work_limit, fast)
    report.elapsed = time.perf_counter() - t0
    return report


def _check_monotone(cell: Cell, g, covers: dict[int, CoverReport], seed: int) -> None:
    if 1 in covers:
        cell.runs += 1
        if covers[1].cover != mst(g):
            cell.fail(f"seed={seed}: M_1 differs from the MST")
    ks = sorted(covers)
    for a, b in zip(ks, ks[1:]):
        cell.runs += 1
        if not covers[a].cover <= covers[b].cover:
            cell.fail(f"seed={seed}: M_{a} not contained in M_{b}")


def _check_embed(cell: Cell, n: int, max_k: int, seed: int, work_limit: int | None) -> None:
    for k in range(1, max_k + 1):
        order = gen_random_order(n, k, seed)
        try:
            brute = mk_brute(embed_weights(order), k, work_limit=work_limit)
        except WorkLimitExceeded as exc:
            cell.abort(str(exc))
            continue
        except InvariantViolation as exc:
            cell.fail(f"seed={seed} k={k}: {exc}")
            continue
        cell.runs += 1
        missing = set(order.sequence) - brute.cover
        if missing:
            cell.fail(f"seed={seed} k={k}: order edges {sorted(missing)} missing from cover")


def _check_tight(cell, n, ks, seeds, use_brute, work_limit, fast) -> None:
    for k in ks:
        for seed in seeds:
            g = gen_tight(n, k, seed)
            try:
                rep = fast(g, k)
            except InvariantViolation as exc:
                cell.fail(f"seed={seed} k={k}: {exc}")
                continue
            cell.runs += 1
            if not rep.tight:
                cell.fail(f"seed={seed} k={k}: size={rep.cover_size} bound={rep.bound}")
            if use_brute:
                try:
                    brute = mk_brute(g, k, work_limit=work_limit)
                except WorkLimitExceeded as exc:
                    cell.abort(str(exc))
                    continue
                if brute.cover != rep.cover:
                    cell.fail(f"seed={seed} k={k}: brute cover differs from fast cover")
