"""Command-line front end: series tables, classification, graphs, verification.

Subcommands: branching, fermionic, js list, js chi, crystal graph, core,
verify.  JSON is the canonical machine format; CSV is available for series
tables, DOT for crystal graphs.  Output is byte-stable for fixed inputs.
"""

from __future__ import annotations

import argparse
import json
import sys

from .branching import METHODS, branching_series
from .cores import is_n_core, is_rectangle_le_n, n_core, n_weight
from .crystal import build_component
from .jantzen_seitz import chi_by_branching, chi_direct, js_set
from .partitions import format_partition, parse_partition
from .qseries import fermionic_series, lattice_points
from .verify import SUITES, run_suites


def _add_common(parser: argparse.ArgumentParser, formats=("json", "csv", "text")):
    parser.add_argument("--format", choices=formats, default="json")
    parser.add_argument("--jobs", type=int, default=1, help="worker count for verify")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slnbranch",
        description="Level-1 affine sl(n) branching functions and partition classification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("branching", help="branching series for a (j, k) class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--method", choices=METHODS + ("all",), default="all")
    _add_common(p)

    p = sub.add_parser("fermionic", help="lattice-sum series for a class L(s)+L(t)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("js", help="restriction-irreducible partitions")
    js_sub = p.add_subparsers(dest="js_command", required=True)

    q = js_sub.add_parser("list", help="members with a given core and weight")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--core", required=True, help='partition text, "-" for empty')
    q.add_argument("--weight", type=int, required=True)
    _add_common(q)

    q = js_sub.add_parser("chi", help="member-count generating series")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--core", required=True)
    q.add_argument("--order", type=int, required=True)
    q.add_argument("--method", choices=("direct", "branching", "both"), default="both")
    _add_common(q)

    p = sub.add_parser("crystal", help="crystal graph of the component of the empty partition")
    crystal_sub = p.add_subparsers(dest="crystal_command", required=True)
    q = crystal_sub.add_parser("graph", help="build and export the component")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--max-size", type=int, required=True)
    _add_common(q, formats=("json", "dot", "text"))

    p = sub.add_parser("core", help="n-core, n-weight, and rectangle data")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("partition", help='partition text, e.g. "5,5,4,1,1"; "-" for empty')
    _add_common(p)

    p = sub.add_parser("verify", help="run cross-verification suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--max-size", type=int, default=10)
    p.add_argument("--order", type=int, default=6)
    _add_common(p)

    return parser


def _series_csv(rows: dict[str, tuple[int, ...]], order: int) -> str:
    header = "method," + ",".join(f"c{d}" for d in range(order + 1))
    lines = [header]
    for method, coeffs in rows.items():
        lines.append(method + "," + ",".join(str(c) for c in coeffs))
    return "\n".join(lines)


def _emit(text: str):
    sys.stdout.write(text + "\n")


def _run_branching(args) -> int:
    methods = list(METHODS) if args.method == "all" else [args.method]
    rows = {
        m: branching_series(args.n, args.j, args.k, args.order, m).coeffs
        for m in methods
    }
    agree = len(set(rows.values())) == 1
    if args.format == "json":
        payload = {
            "n": args.n,
            "j": args.j % args.n,
            "k": args.k % args.n,
            "order": args.order,
        }
        if len(rows) == 1:
            ((method, coeffs),) = rows.items()
            payload.update({"coeffs": list(coeffs), "method": method})
        else:
            payload["methods"] = {m: list(c) for m, c in rows.items()}
            payload["verdict"] = "AGREE" if agree else "DISAGREE"
        _emit(json.dumps(payload, separators=(",", ":")))
    elif args.format == "csv":
        _emit(_series_csv(rows, args.order))
    else:
        for method, coeffs in rows.items():
            _emit(f"{method:9s} " + " ".join(str(c) for c in coeffs))
        if len(rows) > 1:
            _emit("verdict: " + ("AGREE" if agree else "DISAGREE"))
    return 0 if agree else 1


def _run_fermionic(args) -> int:
    series = fermionic_series(args.n, args.s, args.t, args.order)
    visited = sum(1 for _ in lattice_points(args.n, args.s, args.t, args.order))
    if args.format == "json":
        payload = {
            "n": args.n,
            "s": args.s,
            "t": args.t,
            "order": args.order,
            "coeffs": list(series.coeffs),
            "lattice_points": visited,
        }
        _emit(json.dumps(payload, separators=(",", ":")))
    elif args.format == "csv":
        _emit(_series_csv({"fermionic": series.coeffs}, args.order))
    else:
        _emit("fermionic " + " ".join(str(c) for c in series.coeffs))
        _emit(f"lattice points: {visited}")
    return 0


def _require_core(text: str, n: int):
    mu = parse_partition(text)
    if not is_n_core(mu, n):
        raise ValueError(f"--core {text!r} is not an n-core for n={n}")
    return mu


def _run_js_list(args) -> int:
    members = js_set(args.n, _require_core(args.core, args.n), args.weight)
    if args.format == "json":
        _emit(json.dumps([list(p) for p in members], separators=(",", ":")))
    elif args.format == "text":
        for p in members:
            _emit(format_partition(p))
    else:
        raise ValueError("csv output is only available for series tables")
    return 0


def _run_js_chi(args) -> int:
    mu = _require_core(args.core, args.n)
    rows: dict[str, tuple[int, ...]] = {}
    if args.method in ("direct", "both"):
        rows["direct"] = chi_direct(args.n, mu, args.order)
    if args.method in ("branching", "both"):
        rows["branching"] = chi_by_branching(args.n, mu, args.order)
    agree = len(set(rows.values())) == 1
    if args.format == "json":
        payload = {"n": args.n, "core": list(mu), "order": args.order}
        if len(rows) == 1:
            ((method, coeffs),) = rows.items()
            payload.update({"coeffs": list(coeffs), "method": method})
        else:
            payload["methods"] = {m: list(c) for m, c in rows.items()}
            payload["verdict"] = "AGREE" if agree else "DISAGREE"
        _emit(json.dumps(payload, separators=(",", ":")))
    elif args.format == "csv":
        _emit(_series_csv(rows, args.order))
    else:
        for method, coeffs in rows.items():
            _emit(f"{method:9s} " + " ".join(str(c) for c in coeffs))
        if len(rows) > 1:
            _emit("verdict: " + ("AGREE" if agree else "DISAGREE"))
    return 0 if agree else 1


def _run_crystal_graph(args) -> int:
    graph = build_component(args.n, args.max_size)
    if args.format == "dot":
        sys.stdout.write(graph.to_dot())
    elif args.format == "json":
        _emit(graph.to_json())
    else:
        for v in graph.vertices:
            star = "*" if graph.js[v] else ""
            eps = ",".join(str(e) for e in graph.eps[v])
            _emit(f"{format_partition(v)}{star}  eps=({eps})  wt={graph.wt[v]}")
        for src, i, dst in graph.edges:
            _emit(f"{format_partition(src)} -{i}-> {format_partition(dst)}")
    return 0


def _run_core(args) -> int:
    p = parse_partition(args.partition)
    core = n_core(p, args.n)
    rect = is_rectangle_le_n(core, args.n)
    payload = {
        "core": list(core),
        "weight": n_weight(p, args.n),
        "rectangle": list(rect) if rect is not None else None,
    }
    if args.format == "json":
        _emit(json.dumps(payload, separators=(",", ":")))
    else:
        _emit(f"core: {format_partition(core)}")
        _emit(f"weight: {payload['weight']}")
        _emit(f"rectangle: {payload['rectangle']}")
    return 0


def _run_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = run_suites(names, args.n, args.max_size, args.order, jobs=args.jobs)
    if args.format == "json":
        _emit(json.dumps([r.to_dict() for r in reports], separators=(",", ":")))
    else:
        for r in reports:
            _emit(r.summary())
            for failure in r.failures:
                _emit(f"  FAIL {failure}")
    return 0 if all(r.ok for r in reports) else 1


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "branching": _run_branching,
        "fermionic": _run_fermionic,
        "crystal": _run_crystal_graph,
        "core": _run_core,
        "verify": _run_verify,
    }
    try:
        if args.command == "js":
            handler = _run_js_list if args.js_command == "list" else _run_js_chi
        else:
            handler = handlers[args.command]
        return handler(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
