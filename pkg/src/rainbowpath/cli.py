"""Command-line entry point: ``rainbowpath <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import generators as gen
from .analysis import analyze_endpoints
from .builder import AssumptionViolated, build_rainbow_u_path
from .graph import (
    InputError,
    color_degree,
    color_neighborhood,
    find_rainbow_triangle,
    first_missing_pair,
)
from .graph_io import load_graph, write_graph, write_graph_json
from .harness import SUITES, dump_counterexamples, run_suite
from .oracle import SearchBudget, longest_rainbow_path


def _emit(obj: dict) -> None:
    sys.stdout.write(json.dumps(obj, ensure_ascii=False) + "\n")


def _budget(args: argparse.Namespace) -> SearchBudget:
    return SearchBudget(max_nodes=args.max_nodes, time_limit_ms=args.time_limit_ms)


def cmd_check_gallai(args: argparse.Namespace) -> int:
    g = load_graph(args.input)
    missing = first_missing_pair(g)
    tri = find_rainbow_triangle(g)
    _emit(
        {
            "n": g.n,
            "complete": missing is None,
            "missingPair": list(missing) if missing else None,
            "rainbowTriangle": list(tri) if tri else None,
            "gallai": missing is None and tri is None,
        }
    )
    return 0


def cmd_color_degree(args: argparse.Namespace) -> int:
    g = load_graph(args.input)
    vertices = [args.vertex] if args.vertex is not None else range(g.n)
    for v in vertices:
        _emit(
            {
                "vertex": v,
                "colorDegree": color_degree(g, v),
                "colors": sorted(color_neighborhood(g, v)),
            }
        )
    return 0


def cmd_build_path(args: argparse.Namespace) -> int:
    g = load_graph(args.input)
    path, trace = build_rainbow_u_path(
        g, args.vertex, trace=args.trace, precheck=not args.skip_precheck
    )
    if trace is not None:
        for rec in trace:
            _emit(rec.to_json())
    _emit(
        {
            "vertex": args.vertex,
            "colorDegree": color_degree(g, args.vertex),
            "path": list(path.vertices),
            "colors": list(path.colors),
            "length": path.length,
        }
    )
    return 0


def cmd_longest_path(args: argparse.Namespace) -> int:
    g = load_graph(args.input)
    result = longest_rainbow_path(g, start=args.from_vertex, budget=_budget(args))
    _emit(
        {
            "path": list(result.path.vertices),
            "colors": list(result.path.colors),
            "length": result.length,
            "exact": result.exact,
            "nodes": result.nodes,
        }
    )
    return 0


def _parse_vertices(text: str) -> list:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise InputError(f"bad path {text!r}: expected comma-separated integers") from exc


def cmd_analyze(args: argparse.Namespace) -> int:
    g = load_graph(args.input)
    analysis = analyze_endpoints(g, _parse_vertices(args.path), args.k)
    _emit(analysis.to_json())
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    if args.kind == "gk":
        g = gen.gen_gk(args.k)
    elif args.kind == "gallai":
        g = gen.gen_gallai_substitution(args.n, args.seed)
    elif args.kind == "kgood-tf":
        g = gen.gen_kgood_triangle_free(args.n, args.k, args.seed)
    else:
        g = gen.gen_uniform_coloring(args.n, args.colors, args.seed)
    if args.output is None:
        sys.stdout.buffer.write(write_graph(g))
    else:
        out = Path(args.output)
        out.write_bytes(write_graph_json(g) if out.suffix == ".json" else write_graph(g))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    report = run_suite(args.suite, args.trials, args.seed, _budget(args), workers=args.workers)
    text = report.dumps()
    if args.report:
        path = Path(args.report)
        path.write_text(text, encoding="utf-8", newline="\n")
        for ce in dump_counterexamples(report, path):
            print(f"counterexample written to {ce}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    print(
        f"{args.suite}: {len(report.records)} trials, {report.failures} failures, "
        f"{report.inconclusive} inconclusive",
        file=sys.stderr,
    )
    return 0 if report.ok else 1


def _add_budget(p: argparse.ArgumentParser, default_nodes: Optional[int] = None) -> None:
    p.add_argument("--max-nodes", type=int, default=default_nodes, help="search node cap")
    p.add_argument("--time-limit-ms", type=int, default=None, help="search wall-clock cap")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rainbowpath", description="Rainbow paths in edge-colored graphs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-gallai", help="completeness and rainbow-triangle check")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_check_gallai)

    p = sub.add_parser("color-degree", help="color degree and color neighborhood")
    p.add_argument("--input", required=True)
    p.add_argument("--vertex", type=int)
    p.set_defaults(func=cmd_color_degree)

    p = sub.add_parser("build-path", help="constructive rainbow u-path (Gallai input)")
    p.add_argument("--input", required=True)
    p.add_argument("--vertex", type=int, required=True)
    p.add_argument("--trace", action="store_true", help="emit one JSON line per step")
    p.add_argument("--skip-precheck", action="store_true")
    p.set_defaults(func=cmd_build_path)

    p = sub.add_parser("longest-path", help="exact longest rainbow path")
    p.add_argument("--input", required=True)
    p.add_argument("--from", dest="from_vertex", type=int)
    _add_budget(p)
    p.set_defaults(func=cmd_longest_path)

    p = sub.add_parser("analyze", help="endpoint counts and inequalities for a path")
    p.add_argument("--input", required=True)
    p.add_argument("--path", required=True, help='comma-separated vertices, e.g. "0,3,1"')
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("gen", help="generate an instance")
    kinds = p.add_subparsers(dest="kind", required=True)
    q = kinds.add_parser("gk")
    q.add_argument("--k", type=int, required=True)
    q = kinds.add_parser("gallai")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--seed", type=int, default=0)
    q = kinds.add_parser("kgood-tf")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--seed", type=int, default=0)
    q = kinds.add_parser("uniform")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--colors", type=int, required=True)
    q.add_argument("--seed", type=int, default=0)
    for q in kinds.choices.values():
        q.add_argument("--output", help="output file (default stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="run a seeded verification suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--report", help="report path (default stdout)")
    p.add_argument("--workers", type=int, default=1)
    _add_budget(p, default_nodes=5_000_000)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ValueError, KeyError, AssumptionViolated, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
