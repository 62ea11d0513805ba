"""Command-line entry point.

Exit codes: 0 success, 1 bad input or a negative check result, 2 a
mathematical invariant was violated (bound exceeded, fast/brute mismatch,
failed suite cell).
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence

from .connectivity import local_connectivity, min_separator
from .constructible import (
    check_order,
    embed_weights,
    extend_maximal,
    is_k_minimal,
    parse_order,
    serialize_order,
)
from .cover import DEFAULT_WORK_LIMIT, edge_bound, mk_brute, mk_fast
from .errors import DomainError, InvariantViolation
from .generators import fixture_c4, gen_random_complete, gen_tight
from .graph import format_edges, parse_graph, serialize_graph
from .mst import mst
from .suite import verify_suite

log = logging.getLogger("robust_mst")

EXIT_OK, EXIT_DOMAIN, EXIT_INVARIANT = 0, 1, 2


class UsageError(DomainError):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is reserved for invariant violations
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc.strerror}") from None


def _graph(args):
    return parse_graph(_read(args.file), strict=not args.permissive)


def _order(args):
    order = parse_order(_read(args.file))
    if getattr(args, "k", None) is not None and args.k != order.k:
        order = type(order)(args.k, order.sequence, order.host_n)
    return order


def _cmd_mst(args, out) -> int:
    out.write(format_edges(mst(_graph(args))))
    return EXIT_OK


def _cmd_compute_mk(args, out) -> int:
    g = _graph(args)
    if not g.complete:
        log.warning("input graph is not complete; missing edges are treated as absent")
    if args.method in ("fast", "both"):
        report = mk_fast(g, args.k)
    if args.method in ("brute", "both"):
        brute = mk_brute(g, args.k, work_limit=args.work_limit, workers=args.workers)
        if args.method == "brute":
            report = brute
        elif brute.cover != report.cover:
            only_fast = sorted(report.cover - brute.cover)
            only_brute = sorted(brute.cover - report.cover)
            raise InvariantViolation(
                f"fast and brute covers differ: fast-only {only_fast}, brute-only {only_brute}"
            )
    out.write(format_edges(report.cover))
    method = "both" if args.method == "both" else report.method
    summary = (
        f"k={report.k} size={report.cover_size} bound={report.bound} "
        f"tight={'yes' if report.tight else 'no'} method={method}"
    )
    if g.tie_broken:
        summary += " tie_broken=yes"
    out.write(summary + "\n")
    log.info("gv_bound=%d elapsed=%.6fs", report.gv_bound, report.elapsed)
    return EXIT_OK


def _cmd_check_order(args, out) -> int:
    order = _order(args)
    verdict = check_order(order)
    if verdict.valid:
        out.write(f"valid=yes k={order.k} edges={len(order.sequence)}\n")
        return EXIT_OK
    u, v = order.sequence[verdict.first_violation]
    out.write(
        f"valid=no k={order.k} first_violation={verdict.first_violation} "
        f"edge={u},{v} connectivity={verdict.witness}\n"
    )
    return EXIT_DOMAIN


def _cmd_extend_maximal(args, out) -> int:
    order = _order(args)
    _, extended = extend_maximal(order.graph(), order.k, order)
    out.write(serialize_order(extended))
    return EXIT_OK


def _cmd_embed_weights(args, out) -> int:
    out.write(serialize_graph(embed_weights(_order(args))))
    return EXIT_OK


def _cmd_check_kminimal(args, out) -> int:
    g = _graph(args)
    minimal = is_k_minimal(g, args.k)
    line = f"k_minimal={'yes' if minimal else 'no'} k={args.k} edges={g.m}"
    if g.n >= args.k + 1:
        bound = edge_bound(g.n, args.k)
        line += f" bound={bound}"
        if minimal and g.m > bound:
            raise InvariantViolation(f"k-minimal graph with {g.m} edges exceeds bound {bound}")
    out.write(line + "\n")
    return EXIT_OK if minimal else EXIT_DOMAIN


def _cmd_connectivity(args, out) -> int:
    g = _graph(args)
    value = local_connectivity(g, args.s, args.t, args.cap)
    line = f"s={args.s} t={args.t} connectivity={value}"
    if not g.has_edge(args.s, args.t):
        cert = min_separator(g, args.s, args.t)
        line += f" separator={','.join(map(str, sorted(cert.separator)))}"
    out.write(line + "\n")
    return EXIT_OK


def _cmd_gen(args, out) -> int:
    if args.family == "tight":
        g = gen_tight(args.n, args.k, args.seed)
    elif args.family == "random":
        g = gen_random_complete(args.n, args.seed)
    else:
        g = fixture_c4()
    out.write(serialize_graph(g))
    return EXIT_OK


def _cmd_verify_suite(args, out) -> int:
    n_values = args.n or list(range(4, 9))
    report = verify_suite(
        n_values=n_values,
        seeds=range(args.seed_base, args.seed_base + args.seeds),
        k_values=args.k,
        brute_max_n=args.brute_max_n,
        work_limit=args.work_limit,
    )
    for line in report.lines():
        out.write(line + "\n")
    return EXIT_OK if report.ok else EXIT_INVARIANT


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="robust-mst", description="Robust MST covers and k-constructible graphs.")
    p.add_argument("-v", "--verbose", action="store_true", help="log timings to stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_cmd(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("file", nargs="?", default="-", help="graph file (default: stdin)")
        sp.add_argument("--permissive", action="store_true",
                        help="allow repeated weights; ties broken by (weight, u, v)")
        sp.set_defaults(func=func)
        return sp

    def order_cmd(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("file", nargs="?", default="-", help="order file (default: stdin)")
        sp.add_argument("--k", type=int, help="override the k given in the order header")
        sp.set_defaults(func=func)
        return sp

    graph_cmd("mst", _cmd_mst, "minimum spanning tree edges")

    sp = graph_cmd("compute-mk", _cmd_compute_mk, "robust MST cover M_k")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--method", choices=("fast", "brute", "both"), default="fast")
    sp.add_argument("--work-limit", type=int, default=DEFAULT_WORK_LIMIT)
    sp.add_argument("--workers", type=int, default=None, help="processes for brute force")

    order_cmd("check-order", _cmd_check_order, "verify a k-construction order")
    order_cmd("extend-maximal", _cmd_extend_maximal, "extend to an edge-maximal k-constructible graph")
    order_cmd("embed-weights", _cmd_embed_weights, "weights placing the order inside M_k")

    sp = graph_cmd("check-kminimal", _cmd_check_kminimal, "test edge-minimal k-connectivity")
    sp.add_argument("--k", type=int, required=True)

    sp = graph_cmd("connectivity", _cmd_connectivity, "local vertex connectivity of s and t")
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--cap", type=int, default=None)

    gen = sub.add_parser("gen", help="emit a generated graph")
    gen_sub = gen.add_subparsers(dest="family", required=True, parser_class=_Parser)
    tight = gen_sub.add_parser("tight", help="instance meeting the edge bound")
    tight.add_argument("--n", type=int, required=True)
    tight.add_argument("--k", type=int, required=True)
    tight.add_argument("--seed", type=int, default=0)
    rnd = gen_sub.add_parser("random", help="complete graph, permuted weights")
    rnd.add_argument("--n", type=int, required=True)
    rnd.add_argument("--seed", type=int, default=0)
    gen_sub.add_parser("c4", help="4-cycle fixture whose M_2 is the cycle")
    gen.set_defaults(func=_cmd_gen)

    vs = sub.add_parser("verify-suite", help="batch-check the theory on seeded corpora")
    vs.add_argument("--n", type=int, nargs="+", help="vertex counts (default 4..8)")
    vs.add_argument("--k", type=int, nargs="+", help="restrict k (default: all)")
    vs.add_argument("--seeds", type=int, default=40, help="graphs per n")
    vs.add_argument("--seed-base", type=int, default=0)
    vs.add_argument("--brute-max-n", type=int, default=8)
    vs.add_argument("--work-limit", type=int, default=DEFAULT_WORK_LIMIT)
    vs.set_defaults(func=_cmd_verify_suite)
    return p


def _validate(args) -> None:
    for name in ("k", "work_limit", "workers", "cap", "n", "seeds"):
        value = getattr(args, name, None)
        values = value if isinstance(value, list) else [value]
        for v in values:
            if v is not None and v < 1:
                raise UsageError(f"--{name.replace('_', '-')} must be positive, got {v}")


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(
            level=logging.INFO if args.verbose else logging.WARNING,
            format="%(levelname)s: %(message)s",
        )
        _validate(args)
        return args.func(args, out)
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
