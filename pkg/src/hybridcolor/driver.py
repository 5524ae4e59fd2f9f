"""Hybrid driver: per-round kernel dispatch on worklist size.

Every round compares the worklist size against the threshold H (a fraction
of the node count, default 0.6): above the threshold the topology-driven
sweep runs, otherwise the data-driven kernel does. The worklist is
maintained in both modes, so switching costs nothing. Pure data / topo
modes force one kernel throughout. The final coloring is identical across
all modes and thresholds; only the time per round changes.
"""

from __future__ import annotations

import csv
import json
import math
import time
from dataclasses import dataclass, field
from typing import IO

import numpy as np

from .coloring import ColorState, data_driven_iteration, topology_driven_iteration
from .graph import CsrGraph
from .worklist import Worklist

MODES = ("data", "topo", "hybrid")


@dataclass
class HybridConfig:
    threshold_fraction: float = 0.6
    mode: str = "hybrid"
    workers: int = 1
    chunk_size: int = 1024

    def __post_init__(self):
        if not 0.0 <= self.threshold_fraction <= 1.0:
            raise ValueError(f"threshold_fraction must be in [0, 1], got {self.threshold_fraction}")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.chunk_size < 1:
            raise ValueError("chunk_size must be >= 1")


@dataclass
class RoundRecord:
    round: int
    mode_used: str
    worklist_size_in: int
    worklist_size_out: int
    conflicts: int
    wall_seconds: float


@dataclass
class RunReport:
    graph_name: str
    num_nodes: int
    num_undirected_edges: int
    config: HybridConfig
    per_round: list[RoundRecord] = field(default_factory=list)
    total_rounds: int = 0
    total_seconds: float = 0.0
    colors_used: int = 0
    valid: bool = False

    def to_dict(self) -> dict:
        """JSON form. All timing lives under keys ending in 'micros' so
        determinism checks can drop them mechanically."""
        return {
            "graph": self.graph_name,
            "num_nodes": self.num_nodes,
            "num_undirected_edges": self.num_undirected_edges,
            "config": {
                "mode": self.config.mode,
                "threshold_fraction": self.config.threshold_fraction,
                "workers": self.config.workers,
                "chunk_size": self.config.chunk_size,
            },
            "colors_used": self.colors_used,
            "valid": self.valid,
            "total_rounds": self.total_rounds,
            "total_micros": self.total_seconds * 1e6,
            "per_round": [
                {
                    "round": r.round,
                    "mode": r.mode_used,
                    "wl_in": r.worklist_size_in,
                    "wl_out": r.worklist_size_out,
                    "conflicts": r.conflicts,
                    "micros": r.wall_seconds * 1e6,
                }
                for r in self.per_round
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def write_round_csv(self, stream: IO[str]) -> None:
        writer = csv.writer(stream)
        writer.writerow(["round", "mode", "wl_in", "wl_out", "conflicts", "micros"])
        for r in self.per_round:
            writer.writerow(
                [r.round, r.mode_used, r.worklist_size_in, r.worklist_size_out,
                 r.conflicts, f"{r.wall_seconds * 1e6:.3f}"]
            )

    def rows_table(self) -> str:
        header = f"{'round':>5}  {'mode':<5} {'wl_in':>9} {'wl_out':>9} {'conflicts':>9} {'micros':>12}"
        lines = [header]
        for r in self.per_round:
            lines.append(
                f"{r.round:>5}  {r.mode_used:<5} {r.worklist_size_in:>9} "
                f"{r.worklist_size_out:>9} {r.conflicts:>9} {r.wall_seconds * 1e6:>12.1f}"
            )
        return "\n".join(lines)


def color_graph(
    graph: CsrGraph,
    config: HybridConfig | None = None,
    *,
    graph_name: str = "graph",
    kernels=None,
) -> tuple[np.ndarray, RunReport]:
    """Color the whole graph; returns (final colors, run report).

    Starts all nodes uncolored with a full worklist and loops until the
    worklist drains. In hybrid mode a round is topology-driven iff the
    worklist size strictly exceeds ceil(threshold_fraction * num_nodes).
    """
    if config is None:
        config = HybridConfig()
    n = graph.num_nodes
    threshold_count = math.ceil(config.threshold_fraction * n)
    state = ColorState.fresh(n)
    wl = Worklist.init_full(n)
    report = RunReport(graph_name, n, graph.num_undirected_edges, config)

    round_no = 1
    t_run = time.perf_counter()
    while len(wl.current) > 0:
        size_in = len(wl.current)
        if config.mode == "topo":
            use_topo = True
        elif config.mode == "data":
            use_topo = False
        else:
            use_topo = size_in > threshold_count
        iteration = topology_driven_iteration if use_topo else data_driven_iteration
        t0 = time.perf_counter()
        outcome = iteration(
            graph, state, wl, round_no,
            workers=config.workers, chunk_size=config.chunk_size, kernels=kernels,
        )
        report.per_round.append(
            RoundRecord(
                round=round_no,
                mode_used="topo" if use_topo else "data",
                worklist_size_in=size_in,
                worklist_size_out=len(wl.current),
                conflicts=outcome.conflicts_detected,
                wall_seconds=time.perf_counter() - t0,
            )
        )
        round_no += 1
    report.total_seconds = time.perf_counter() - t_run

    colors = state.colors_read.copy()
    report.total_rounds = len(report.per_round)
    report.colors_used = colors_used(colors)
    report.valid = verify_coloring(graph, colors) == 0
    return colors, report


def colors_used(colors: np.ndarray) -> int:
    """Number of colors a finished run used (colors are 1..max, so the max)."""
    if len(colors) == 0:
        return 0
    if colors.min() < 1:
        raise ValueError("invalid coloring: uncolored node (color 0) present")
    return int(colors.max())


def verify_coloring(graph: CsrGraph, colors: np.ndarray) -> int:
    """Count invalid edges: (u, v) with u < v where the endpoint colors are
    equal or u is uncolored. 0 means the coloring is valid.

    Independent of the coloring kernels (plain array pass over the CSR).
    """
    if len(colors) != graph.num_nodes:
        raise ValueError(
            f"colors array has length {len(colors)}, graph has {graph.num_nodes} nodes"
        )
    if graph.num_edges == 0:
        return 0
    src = np.repeat(np.arange(graph.num_nodes, dtype=np.int64), graph.degrees)
    dst = graph.col_indices
    once = src < dst
    bad = (colors[src] == colors[dst]) | (colors[src] == 0)
    return int(np.count_nonzero(bad & once))
