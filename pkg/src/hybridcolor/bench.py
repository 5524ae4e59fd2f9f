"""Worklist-vs-sweep micro-benchmark pair.

Both kernels do identical work each iteration: deactivate the batch_size
lowest-id active nodes and push every other active node to the next
worklist. push_wl reads its candidates from the worklist (data-driven);
push_nowl scans every node id and tests the active flag (topology-driven),
while still maintaining the worklist. The interesting output is the wall
time per iteration (TTI) of each variant and where the two curves cross.

Timing wraps the kernel body only; the worklist swap and the batch-cutoff
lookup are driver bookkeeping and stay outside the clock.
"""

from __future__ import annotations

import csv
import math
import time
from dataclasses import dataclass
from typing import IO

import numpy as np

from . import _backend
from .graph import CsrGraph
from .worklist import Worklist

VARIANTS = ("push_wl", "push_nowl")


@dataclass
class BenchConfig:
    batch_size: int = 1000
    variant: str = "push_wl"
    repetitions: int = 10

    def __post_init__(self):
        if self.batch_size < 1:
            raise ValueError("batch_size must be >= 1")
        if self.repetitions < 1:
            raise ValueError("repetitions must be >= 1")
        if self.variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}, got {self.variant!r}")


@dataclass
class TtiRecord:
    iteration: int
    active_before: int
    micros_mean: float
    micros_min: float
    micros_std: float


@dataclass
class TtiSeries:
    variant: str
    per_iteration: list[TtiRecord]

    def iterations(self) -> list[int]:
        return [r.iteration for r in self.per_iteration]

    def micros(self) -> np.ndarray:
        return np.array([r.micros_mean for r in self.per_iteration])


def _one_pass(n, batch_size, variant, kernels, workers, chunk_size, deactivated=None):
    """Run the pipe to empty once; returns per-iteration kernel nanoseconds.

    With `deactivated` given, also appends the observed per-iteration
    deactivated-id arrays (flag diff), for the equal-work check.
    """
    active = np.ones(n, dtype=np.uint8)
    wl = Worklist.init_full(n)
    times = []
    sizes = []
    while len(wl.current) > 0:
        cur = wl.current
        take = min(batch_size, len(cur))
        cutoff = int(cur[take - 1])  # cur is sorted: the take lowest active ids
        if deactivated is not None:
            before = active.copy()
        sizes.append(len(cur))
        if variant == "push_wl":
            t0 = time.perf_counter_ns()
            kernels.bench_from_list(cur, active, cutoff, wl.next_storage, wl.cursor,
                                    workers, chunk_size)
            times.append(time.perf_counter_ns() - t0)
        else:
            t0 = time.perf_counter_ns()
            kernels.bench_sweep(active, cutoff, wl.next_storage, wl.cursor,
                                workers, chunk_size)
            times.append(time.perf_counter_ns() - t0)
        if deactivated is not None:
            deactivated.append(np.flatnonzero((before == 1) & (active == 0)))
        wl.swap_and_sort()
    return times, sizes


def run_push_bench(
    graph: CsrGraph,
    config: BenchConfig,
    *,
    workers: int = 1,
    chunk_size: int = 1024,
    kernels=None,
) -> TtiSeries:
    """Time one variant over the full pipe, averaged over config.repetitions runs."""
    k = kernels if kernels is not None else _backend.kernels
    n = graph.num_nodes
    all_times = []
    sizes = None
    for _ in range(config.repetitions):
        times, run_sizes = _one_pass(n, config.batch_size, config.variant, k,
                                     workers, chunk_size)
        all_times.append(times)
        sizes = run_sizes  # deactivation is deterministic, identical every run

    micros = np.asarray(all_times, dtype=np.float64) / 1e3
    records = [
        TtiRecord(
            iteration=t,
            active_before=sizes[t],
            micros_mean=float(micros[:, t].mean()),
            micros_min=float(micros[:, t].min()),
            micros_std=float(micros[:, t].std()),
        )
        for t in range(micros.shape[1])
    ]
    return TtiSeries(config.variant, records)


def collect_deactivations(
    graph: CsrGraph,
    config: BenchConfig,
    *,
    workers: int = 1,
    chunk_size: int = 1024,
    kernels=None,
) -> list[np.ndarray]:
    """Untimed pass recording which nodes each iteration deactivated."""
    k = kernels if kernels is not None else _backend.kernels
    deactivated: list[np.ndarray] = []
    _one_pass(graph.num_nodes, config.batch_size, config.variant, k,
              workers, chunk_size, deactivated=deactivated)
    return deactivated


def expected_iterations(num_nodes: int, batch_size: int) -> int:
    return math.ceil(num_nodes / batch_size)


def detect_crossovers(wl_series: TtiSeries, nowl_series: TtiSeries) -> list[int]:
    """Iterations where sign(nowl - wl) flips relative to the previous
    iteration; zero differences count as positive."""
    if wl_series.iterations() != nowl_series.iterations():
        raise ValueError("series cover different iteration ranges")
    diff = nowl_series.micros() - wl_series.micros()
    signs = np.where(diff >= 0, 1, -1)
    flips = np.flatnonzero(signs[1:] != signs[:-1]) + 1
    return [wl_series.per_iteration[t].iteration for t in flips]


def write_tti_csv(stream: IO[str], series: list[TtiSeries]) -> None:
    """CSV contract consumed by external plotting:
    variant,iteration,active_before,micros_mean,micros_min,micros_std."""
    writer = csv.writer(stream)
    writer.writerow(["variant", "iteration", "active_before",
                     "micros_mean", "micros_min", "micros_std"])
    for s in series:
        for r in s.per_iteration:
            writer.writerow([
                s.variant, r.iteration, r.active_before,
                f"{r.micros_mean:.3f}", f"{r.micros_min:.3f}", f"{r.micros_std:.3f}",
            ])
