"""Charts for hybridcolor outputs.

Consumes only the documented file contracts, never library internals:

- the bench CSV (variant,iteration,active_before,micros_mean,micros_min,
  micros_std) with both push variants present, and
- JSON run reports (graph identity, config.mode, total_micros).

plot_tti draws one micros-per-iteration series per variant and marks
crossover iterations with vertical rules; plot_speedup draws
baseline_time / mode_time bars, with the baseline bar pinned at exactly 1.0.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

__version__ = "0.1.0"

VARIANTS = ("push_wl", "push_nowl")
TTI_COLUMNS = ["variant", "iteration", "active_before",
               "micros_mean", "micros_min", "micros_std"]


def read_tti_csv(path: str | Path) -> dict[str, list[dict]]:
    """Rows grouped by variant, in file order."""
    by_variant: dict[str, list[dict]] = {}
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        missing = set(TTI_COLUMNS) - set(reader.fieldnames or [])
        if missing:
            raise ValueError(f"{path}: missing CSV columns {sorted(missing)}")
        for row in reader:
            by_variant.setdefault(row["variant"], []).append(
                {
                    "iteration": int(row["iteration"]),
                    "active_before": int(row["active_before"]),
                    "micros_mean": float(row["micros_mean"]),
                }
            )
    return by_variant


def crossover_iterations(wl_rows: list[dict], nowl_rows: list[dict]) -> list[int]:
    """Iterations where sign(nowl - wl) differs from the previous iteration;
    zero differences count as positive. Same rule the producer uses."""
    if [r["iteration"] for r in wl_rows] != [r["iteration"] for r in nowl_rows]:
        raise ValueError("variants cover different iteration ranges")
    signs = [
        1 if n["micros_mean"] - w["micros_mean"] >= 0 else -1
        for w, n in zip(wl_rows, nowl_rows)
    ]
    return [
        wl_rows[t]["iteration"]
        for t in range(1, len(signs))
        if signs[t] != signs[t - 1]
    ]


def build_tti_figure(by_variant: dict[str, list[dict]], logy: bool = False):
    """Two-series TTI chart with crossovers marked; x is the CSV's iteration
    column verbatim."""
    missing = [v for v in VARIANTS if v not in by_variant]
    if missing:
        raise ValueError(f"CSV is missing variant(s): {', '.join(missing)}")

    fig, ax = plt.subplots(figsize=(8, 4.5))
    for variant in VARIANTS:
        rows = by_variant[variant]
        ax.plot(
            [r["iteration"] for r in rows],
            [r["micros_mean"] for r in rows],
            label=variant,
            marker=".",
            linewidth=1,
        )
    crossings = crossover_iterations(by_variant["push_wl"], by_variant["push_nowl"])
    for i, t in enumerate(crossings):
        ax.axvline(t, color="gray", linestyle="--", linewidth=0.8,
                   label="crossover" if i == 0 else "_nolegend_")
    if logy:
        ax.set_yscale("log")
    ax.set_xlabel("iteration")
    ax.set_ylabel("time per iteration (µs)")
    ax.set_title("worklist vs sweep: time per iteration")
    ax.legend()
    fig.tight_layout()
    return fig, crossings


def plot_tti(csv_path: str | Path, out_image_path: str | Path, logy: bool = False) -> list[int]:
    """Render the TTI chart; returns the marked crossover iterations."""
    fig, crossings = build_tti_figure(read_tti_csv(csv_path), logy=logy)
    fig.savefig(out_image_path, dpi=120)
    plt.close(fig)
    return crossings


def load_reports(paths: list[str | Path]) -> list[dict]:
    reports = []
    for path in paths:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
        for key in ("graph", "num_nodes", "num_undirected_edges", "config", "total_micros"):
            if key not in doc:
                raise ValueError(f"{path}: not a run report (missing {key!r})")
        reports.append(doc)
    return reports


def speedup_ratios(reports: list[dict], baseline_mode: str) -> tuple[list[str], list[float]]:
    """(mode labels, baseline_time / mode_time) in report order; the baseline
    report's ratio is exactly 1.0."""
    identities = {
        (r["graph"], r["num_nodes"], r["num_undirected_edges"]) for r in reports
    }
    if len(identities) != 1:
        raise ValueError(f"reports describe different graphs: {sorted(identities)}")
    modes = [r["config"]["mode"] for r in reports]
    baseline = [r for r in reports if r["config"]["mode"] == baseline_mode]
    if not baseline:
        raise ValueError(f"no report with baseline mode {baseline_mode!r}")
    if len(baseline) > 1:
        raise ValueError(f"multiple reports with baseline mode {baseline_mode!r}")
    base_time = float(baseline[0]["total_micros"])
    ratios = [
        1.0 if r is baseline[0] else base_time / float(r["total_micros"])
        for r in reports
    ]
    return modes, ratios


def build_speedup_figure(reports: list[dict], baseline_mode: str):
    modes, ratios = speedup_ratios(reports, baseline_mode)
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar(range(len(ratios)), ratios, tick_label=modes)
    ax.axhline(1.0, color="gray", linewidth=0.8)
    ax.set_ylabel(f"speedup over {baseline_mode}")
    ax.set_title(reports[0]["graph"])
    fig.tight_layout()
    return fig, modes, ratios


def plot_speedup(
    report_paths: list[str | Path], baseline_mode: str, out_image_path: str | Path
) -> tuple[list[str], list[float]]:
    """Render the speedup bar chart; returns (mode labels, ratios)."""
    fig, modes, ratios = build_speedup_figure(load_reports(report_paths), baseline_mode)
    fig.savefig(out_image_path, dpi=120)
    plt.close(fig)
    return modes, ratios
