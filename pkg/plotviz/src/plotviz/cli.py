"""plotviz command line: tti and speedup subcommands.

Exit codes: 0 success, 2 bad input (missing variant, mismatched graphs,
unreadable files).
"""

from __future__ import annotations

import argparse
import sys

from . import plot_speedup, plot_tti


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="plotviz",
                                     description="charts for hybridcolor outputs")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    tti = sub.add_parser("tti", help="per-iteration timing curves from a bench CSV")
    tti.add_argument("csv", help="bench CSV with both push variants")
    tti.add_argument("out", help="output image path (png/svg/...)")
    tti.add_argument("--logy", action="store_true", help="log-scale the time axis")

    speedup = sub.add_parser("speedup", help="speedup bars from JSON run reports")
    speedup.add_argument("--baseline", required=True, metavar="MODE",
                         help="mode whose time the others are divided by")
    speedup.add_argument("reports", nargs="+", help="run report JSON files, then the output image")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.subcommand == "tti":
            crossings = plot_tti(args.csv, args.out, logy=args.logy)
            print(f"wrote {args.out}; crossovers: "
                  + (" ".join(map(str, crossings)) if crossings else "none"))
        else:
            if len(args.reports) < 2:
                build_parser().error("speedup needs at least one report and the output path")
            *report_paths, out = args.reports
            modes, ratios = plot_speedup(report_paths, args.baseline, out)
            bars = "  ".join(f"{m}={r:.2f}x" for m, r in zip(modes, ratios))
            print(f"wrote {out}; {bars}")
        return 0
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
