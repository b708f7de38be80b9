"""Command-line interface.

Subcommands: compute, construct, bound, enumerate, verify, correlate,
export.  Human-readable tables go to stdout; ``--json`` switches to a
stable JSON rendering (``--json -`` or bare ``--json`` for stdout, or a
file path).  Exit codes: 0 success, 1 verification mismatch, 2 usage or
input error.  Identical invocations produce identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from typing import Sequence

from .bounds import tree_max_bound, unicyclic_max_bound
from .canon import canonical_form
from .enumeration import enumerate_trees, enumerate_unicyclic
from .graph6 import emit_graph6, parse_graph6, to_dot
from .graphs import Graph, GraphError, graph_from_edges, max_degree
from .indices import EdgelessGraphError, IndexKind, connectivity_index
from .radicals import RadicalValue
from .transforms import TransformError
from .verify import (
    chi_r_correlation,
    run_sweeps,
    transform_monotonicity_suite,
    verify_top_two,
    verify_tree_max,
    verify_unicyclic_max,
)
from . import construct as constructions

USAGE_ERROR = 2
MISMATCH = 1


def _read_edge_file(path: str) -> Graph:
    """Edge-list file: one ``u v`` pair per line; n is the largest label + 1."""
    pairs: list[tuple[int, int]] = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            u, v = line.split()
            pairs.append((int(u), int(v)))
    if not pairs:
        raise GraphError(f"no edges found in {path}")
    n = max(max(u, v) for u, v in pairs) + 1
    return graph_from_edges(n, pairs)


def _input_graph(args: argparse.Namespace) -> Graph:
    if getattr(args, "g6", None):
        return parse_graph6(args.g6)
    if getattr(args, "edges", None):
        return _read_edge_file(args.edges)
    raise GraphError("provide a graph with --g6 or --edges")


def _emit_json(payload: dict, target: str) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if target == "-":
        sys.stdout.write(text)
    else:
        with open(target, "w", encoding="utf-8") as fh:
            fh.write(text)


def _print_value(label: str, value: RadicalValue) -> None:
    print(f"{label}:")
    print(f"  exact: {value}")
    print(f"  terms: {json.dumps(value.to_json_dict()['terms'])}")
    print(f"  float: {float(value)!r}")


# -- subcommands ----------------------------------------------------------------


def _cmd_compute(args: argparse.Namespace) -> int:
    g = _input_graph(args)
    kind = IndexKind(args.index)
    value = connectivity_index(g, kind)
    if args.json:
        _emit_json(
            {
                "kind": "compute",
                "index": kind.value,
                "n": g.n,
                "m": g.m,
                "value": value.to_json_dict(),
            },
            args.json,
        )
    else:
        print(f"graph: n={g.n} m={g.m} maxdeg={max_degree(g)}")
        _print_value(f"{kind.value}-connectivity", value)
    return 0


def _cmd_construct(args: argparse.Namespace) -> int:
    if args.graph_class == "tree":
        graphs = (
            [constructions.tree_extremal(args.n, args.delta)]
            if args.delta >= (args.n + 1) // 2
            else constructions.spider_family(args.n, args.delta)
        )
    else:
        graphs = (
            [constructions.unicyclic_extremal(args.n, args.delta)]
            if args.delta >= (args.n + 3) // 2
            else constructions.cycle_spider_family(args.n, args.delta)
        )
    if args.json:
        _emit_json(
            {
                "kind": "construct",
                "class": args.graph_class,
                "n": args.n,
                "delta": args.delta,
                "graphs": [emit_graph6(g) for g in graphs],
            },
            args.json,
        )
    elif args.dot:
        for i, g in enumerate(graphs):
            sys.stdout.write(to_dot(g, name=f"extremal_{i}"))
    else:
        for g in graphs:
            print(emit_graph6(g))
    return 0


def _cmd_bound(args: argparse.Namespace) -> int:
    fn = tree_max_bound if args.graph_class == "tree" else unicyclic_max_bound
    value = fn(args.n, args.delta)
    if args.json:
        _emit_json(
            {
                "kind": "bound",
                "class": args.graph_class,
                "n": args.n,
                "delta": args.delta,
                "value": value.to_json_dict(),
            },
            args.json,
        )
    else:
        _print_value(f"max {args.graph_class} bound (n={args.n}, delta={args.delta})", value)
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    enumerate_fn = enumerate_trees if args.graph_class == "tree" else enumerate_unicyclic
    graphs = enumerate_fn(args.n, args.delta)
    if args.count_only:
        counts = Counter(max_degree(g) for g in graphs)
        if args.json:
            _emit_json(
                {
                    "kind": "enumerate",
                    "class": args.graph_class,
                    "n": args.n,
                    "counts": {str(d): counts[d] for d in sorted(counts)},
                    "total": len(graphs),
                },
                args.json,
            )
        else:
            for d in sorted(counts):
                print(f"delta={d} count={counts[d]}")
            print(f"total={len(graphs)}")
    elif args.json:
        _emit_json(
            {
                "kind": "enumerate",
                "class": args.graph_class,
                "n": args.n,
                "graphs": [emit_graph6(g) for g in graphs],
            },
            args.json,
        )
    else:
        for g in graphs:
            print(emit_graph6(g))
    return 0


def _print_extremal_report(report) -> None:
    d = report.to_json_dict()
    print(
        f"{d['class']} n={d['n']} delta={d['delta']}: size={d['class_size']} "
        f"value_match={d['match']['value']} set_match={d['match']['set']} "
        f"argmax={len(d['argmax'])}"
    )


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.graph_class == "transforms":
        report = transform_monotonicity_suite(args.trials, seed=args.seed)
        if args.json:
            _emit_json(report.to_json_dict(), args.json)
        else:
            print(
                f"transforms: merge {report.merge_trials} trials "
                f"({len(report.merge_violations)} violations), "
                f"reattach {report.reattach_trials} trials "
                f"({len(report.reattach_violations)} violations)"
            )
            if report.warning:
                print(f"warning: {report.warning}")
        return 0 if report.passed else MISMATCH

    if args.all:
        result = run_sweeps(threads=args.threads)
        if args.json:
            _emit_json(result.to_json_dict(), args.json)
        else:
            for r in result.tree_reports + result.unicyclic_reports:
                _print_extremal_report(r)
            for r in result.top_two_reports:
                print(f"top-two n={r.n}: passed={r.passed}")
            print(f"overall: {'PASS' if result.passed else 'FAIL'}")
        return 0 if result.passed else MISMATCH

    if args.graph_class == "toptwo":
        if args.n is None:
            raise ValueError("verify --class toptwo needs --n")
        report = verify_top_two(args.n)
        if args.json:
            _emit_json(report.to_json_dict(), args.json)
        else:
            print(f"top-two ranking over {report.total} unicyclic graphs on {report.n} vertices")
            print(f"  rank 1: {report.first_value} (~{float(report.first_value)!r}), {len(report.first)} graph(s)")
            print(f"  rank 2: {report.second_value} (~{float(report.second_value)!r}), {len(report.second)} graph(s)")
            print(f"result: {'PASS' if report.passed else 'FAIL'}")
        return 0 if report.passed else MISMATCH

    if args.n is None or args.delta is None:
        raise ValueError("verify needs --n and --delta (or --all)")
    fn = verify_tree_max if args.graph_class == "tree" else verify_unicyclic_max
    report = fn(args.n, args.delta)
    if args.json:
        _emit_json(report.to_json_dict(), args.json)
    else:
        d = report.to_json_dict()
        print(f"class: {d['class']}  n={d['n']}  delta={d['delta']}  family size: {d['class_size']}")
        print(f"  formula:   {report.formula_value} (~{float(report.formula_value)!r})")
        if report.brute_max is not None:
            print(f"  brute max: {report.brute_max} (~{float(report.brute_max)!r})")
        print(f"  argmax ({len(d['argmax'])}): {' '.join(d['argmax'])}")
        print(f"  expected ({len(d['expected'])}): {' '.join(d['expected'])}")
        print(f"  match: value={d['match']['value']} set={d['match']['set']}")
        print(f"result: {'PASS' if report.passed else 'FAIL'}")
    return 0 if report.passed else MISMATCH


def _cmd_correlate(args: argparse.Namespace) -> int:
    r = chi_r_correlation(args.n, args.max_delta)
    count = len(enumerate_trees(args.n, None if args.max_delta is None else (1, args.max_delta)))
    if args.json:
        _emit_json(
            {
                "kind": "correlate",
                "n": args.n,
                "max_delta": args.max_delta,
                "graphs": count,
                "pearson": r,
            },
            args.json,
        )
    else:
        print(f"trees n={args.n} maxdeg<={args.max_delta or args.n - 1}: {count} graphs")
        print(f"pearson(sum, product) = {r!r}")
    return 0


def _cmd_export(args: argparse.Namespace) -> int:
    g = _input_graph(args)
    if args.canonical:
        g = canonical_form(g)
    if args.json:
        _emit_json(
            {
                "kind": "export",
                "n": g.n,
                "m": g.m,
                "graph6": emit_graph6(g),
                "edges": [list(e) for e in g.edges],
            },
            args.json,
        )
    elif args.dot:
        sys.stdout.write(to_dot(g))
    else:
        print(emit_graph6(g))
    return 0


# -- parser ----------------------------------------------------------------------


def _add_json_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--json",
        nargs="?",
        const="-",
        default=None,
        metavar="PATH",
        help="emit JSON to PATH (or stdout when no path is given)",
    )


def _add_graph_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--g6", help="graph6 string")
    p.add_argument("--edges", help="edge-list file, one 'u v' pair per line")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sumconn",
        description="Sum/product-connectivity indices, extremal families, and verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="index of a single graph")
    _add_graph_input(p)
    p.add_argument("--index", choices=["sum", "product"], default="sum")
    _add_json_flag(p)
    p.set_defaults(fn=_cmd_compute)

    p = sub.add_parser("construct", help="emit the extremal family for (class, n, delta)")
    p.add_argument("--class", dest="graph_class", choices=["tree", "unicyclic"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--dot", action="store_true", help="emit DOT instead of graph6")
    _add_json_flag(p)
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("bound", help="closed-form maximum value")
    p.add_argument("--class", dest="graph_class", choices=["tree", "unicyclic"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    _add_json_flag(p)
    p.set_defaults(fn=_cmd_bound)

    p = sub.add_parser("enumerate", help="isomorph-free family listing")
    p.add_argument("--class", dest="graph_class", choices=["tree", "unicyclic"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=int, default=None)
    p.add_argument("--count-only", action="store_true")
    _add_json_flag(p)
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("verify", help="brute-force verification")
    p.add_argument(
        "--class",
        dest="graph_class",
        choices=["tree", "unicyclic", "toptwo", "transforms"],
        default="tree",
    )
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--delta", type=int, default=None)
    p.add_argument("--all", action="store_true", help="run the full standard sweep")
    p.add_argument("--trials", type=int, default=1000, help="transform suite trials")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)
    _add_json_flag(p)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("correlate", help="Pearson correlation of the two indices over trees")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-delta", type=int, default=None)
    _add_json_flag(p)
    p.set_defaults(fn=_cmd_correlate)

    p = sub.add_parser("export", help="convert a graph between formats")
    _add_graph_input(p)
    p.add_argument("--dot", action="store_true")
    p.add_argument("--canonical", action="store_true", help="canonically relabel first")
    _add_json_flag(p)
    p.set_defaults(fn=_cmd_export)

    return parser


def dispatch(argv: Sequence[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (GraphError, TransformError, EdgelessGraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
