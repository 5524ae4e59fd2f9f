"""Command-line front end.

Exit codes: 0 success, 1 invalid coloring or broken kernel invariant
(should be unreachable), 2 usage/input error, 3 I/O error on outputs.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from ._backend import backend_name
from .bench import BenchConfig, collect_deactivations, detect_crossovers, run_push_bench, write_tti_csv
from .driver import MODES, HybridConfig, color_graph
from .graph import MatrixMarketError, degree_stats, load_graph

EXIT_OK = 0
EXIT_INVALID_COLORING = 1
EXIT_USAGE = 2
EXIT_IO = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hybridcolor",
        description="Worklist-persistent parallel graph coloring and kernel micro-benchmarks",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    stats = sub.add_parser("stats", help="node/edge counts and degree statistics")
    stats.add_argument("graph", help="path to .mtx file or .npz CSR cache")
    stats.add_argument("--format", choices=["table", "json"], default="table")

    color = sub.add_parser("color", help="color the graph and report the result")
    color.add_argument("graph", help="path to .mtx file or .npz CSR cache")
    color.add_argument("--mode", choices=list(MODES), default="hybrid")
    color.add_argument("--threshold", type=float, default=0.6,
                       help="worklist-size fraction above which hybrid goes topology-driven")
    color.add_argument("--workers", type=int, default=1)
    color.add_argument("--format", choices=["table", "json", "csv"], default="table")
    color.add_argument("--out", metavar="PATH", help="write the JSON run report here")

    bench = sub.add_parser("bench", help="run the push_wl / push_nowl micro-benchmark pair")
    bench.add_argument("graph", help="path to .mtx file or .npz CSR cache")
    bench.add_argument("--batch", type=int, default=1000,
                       help="active nodes deactivated per iteration")
    bench.add_argument("--reps", type=int, default=10, help="runs to average TTI over")
    bench.add_argument("--workers", type=int, default=1)
    bench.add_argument("--out", metavar="PATH", required=True, help="TTI CSV output path")
    return parser


def _load(path: str):
    return load_graph(path)


def cmd_stats(args) -> int:
    stats = degree_stats(_load(args.graph))
    if args.format == "json":
        import json

        print(json.dumps(stats.__dict__, indent=2, sort_keys=True))
    else:
        print(
            f"{stats.num_nodes} nodes, {stats.num_undirected_edges} edges, "
            f"δ {stats.min_degree}/{stats.median_degree}/{stats.max_degree}"
        )
    return EXIT_OK


def cmd_color(args) -> int:
    config = HybridConfig(threshold_fraction=args.threshold, mode=args.mode,
                          workers=args.workers)
    graph = _load(args.graph)
    colors, report = color_graph(graph, config, graph_name=Path(args.graph).stem)

    if args.format == "json":
        print(report.to_json())
    elif args.format == "csv":
        report.write_round_csv(sys.stdout)
    else:
        print(f"graph: {report.graph_name} "
              f"({report.num_nodes} nodes, {report.num_undirected_edges} undirected edges)")
        print(f"mode: {config.mode}  threshold: {config.threshold_fraction}  "
              f"workers: {config.workers}  backend: {backend_name()}")
        print(f"colors_used: {report.colors_used}")
        print(f"total_rounds: {report.total_rounds}")
        print(f"valid: {str(report.valid).lower()}")
        print(f"total_micros: {report.total_seconds * 1e6:.1f}")
        print(report.rows_table())

    if args.out:
        _write_text(args.out, report.to_json() + "\n")
    return EXIT_OK if report.valid else EXIT_INVALID_COLORING


def cmd_bench(args) -> int:
    graph = _load(args.graph)
    series = []
    for variant in ("push_wl", "push_nowl"):
        config = BenchConfig(batch_size=args.batch, variant=variant, repetitions=args.reps)
        series.append(run_push_bench(graph, config, workers=args.workers))

    deact = [
        collect_deactivations(
            graph, BenchConfig(batch_size=args.batch, variant=v, repetitions=1),
            workers=args.workers,
        )
        for v in ("push_wl", "push_nowl")
    ]
    same_work = len(deact[0]) == len(deact[1]) and all(
        (a == b).all() for a, b in zip(deact[0], deact[1])
    )

    import io

    buf = io.StringIO()
    write_tti_csv(buf, series)
    _write_text(args.out, buf.getvalue())

    print(f"wrote {args.out} ({len(series)} variants x {len(series[0].per_iteration)} iterations)")
    print(f"deactivation sets identical across variants: {'yes' if same_work else 'NO'}")
    crossings = detect_crossovers(series[0], series[1])
    print("crossovers: " + (" ".join(map(str, crossings)) if crossings else "none"))
    return EXIT_OK if same_work else EXIT_INVALID_COLORING


class OutputError(Exception):
    """Output path could not be written."""


def _write_text(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise OutputError(f"cannot write {path}: {exc}") from exc


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if getattr(args, "threshold", None) is not None and not 0.0 <= args.threshold <= 1.0:
        parser.error(f"--threshold must be in [0, 1], got {args.threshold}")
    if getattr(args, "workers", 1) < 1:
        parser.error("--workers must be >= 1")
    if getattr(args, "batch", 1) < 1:
        parser.error("--batch must be >= 1")
    if getattr(args, "reps", 1) < 1:
        parser.error("--reps must be >= 1")

    handler = {"stats": cmd_stats, "color": cmd_color, "bench": cmd_bench}[args.subcommand]
    try:
        return handler(args)
    except OutputError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (FileNotFoundError, MatrixMarketError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
