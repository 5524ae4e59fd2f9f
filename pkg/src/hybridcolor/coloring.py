"""Iterative parallel graph coloring kernels (IPGC).

Each round is two synchronous phases over the active nodes:

  1. assignment — every active node speculatively takes the smallest
     positive color not used by any neighbor in the previous round's
     snapshot. Two adjacent active nodes can legally pick the same color;
     that is the speculation that makes the phase embarrassingly parallel.
  2. conflict resolution — of any same-round edge whose endpoints chose the
     same color, the higher-id endpoint is uncolored and pushed back to the
     worklist; the lower-id endpoint keeps its color.

Reads always come from the committed snapshot (colors_read) and writes go
to colors_write, with an explicit commit between phases, so a round's
outcome is identical for any worker count and for either execution mode:
data-driven (iterate the worklist) or topology-driven (sweep all nodes,
testing activity per node). Color 0 is the "uncolored" sentinel; real
colors start at 1.

The lowest-id node of any conflict never loses, so every round permanently
colors at least one node: the worklist strictly shrinks and the loop
terminates in at most num_nodes rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import _backend
from .graph import ID_DTYPE, CsrGraph
from .worklist import Worklist


@dataclass
class ColorState:
    """Double-buffered per-node colors plus the round stamp of the last assignment."""

    colors_read: np.ndarray
    colors_write: np.ndarray
    active_stamp: np.ndarray

    @classmethod
    def fresh(cls, num_nodes: int) -> "ColorState":
        # all nodes start at color 0: uncolored and conflicting
        return cls(
            colors_read=np.zeros(num_nodes, dtype=ID_DTYPE),
            colors_write=np.zeros(num_nodes, dtype=ID_DTYPE),
            active_stamp=np.zeros(num_nodes, dtype=ID_DTYPE),
        )


@dataclass
class RoundOutcome:
    """Per-round telemetry: processed = colored_permanently + pushed_back."""

    colored_permanently: int
    pushed_back: int
    conflicts_detected: int


def mex_positive(forbidden: Iterable[int]) -> int:
    """Smallest integer c >= 1 not in `forbidden` (0 is the uncolored sentinel)."""
    taken = set(forbidden)
    c = 1
    while c in taken:
        c += 1
    return c


def assign_color(graph: CsrGraph, state: ColorState, node: int, round_no: int) -> int:
    """Speculative single-node assignment against the read snapshot.

    Scalar reference for the backend assignment kernels; the hot path runs
    whole node batches through the selected backend instead.
    """
    assert state.colors_read[node] == 0, f"assign_color on inactive node {node}"
    color = mex_positive(int(c) for c in state.colors_read[graph.neighbors(node)])
    state.colors_write[node] = color
    state.active_stamp[node] = round_no
    return color


def resolve_conflicts(
    graph: CsrGraph, state: ColorState, node: int, round_no: int, wl: Worklist
) -> bool:
    """Uncolor `node` if a lower-id neighbor took the same color this round.

    Expects the round's tentative colors to be committed into colors_read
    (the inter-phase barrier). Losers get colors_write reset to 0 and are
    pushed; the caller commits the resets after the phase. Returns True iff
    the node lost.
    """
    color = state.colors_read[node]
    for v in graph.neighbors(node):
        if v < node and state.active_stamp[v] == round_no and state.colors_read[v] == color:
            state.colors_write[node] = 0
            wl.push(int(node))
            return True
    return False


def _commit_list(state: ColorState, nodes: np.ndarray) -> None:
    state.colors_read[nodes] = state.colors_write[nodes]


def _commit_stamped(state: ColorState, round_no: int) -> None:
    np.copyto(state.colors_read, state.colors_write, where=state.active_stamp == round_no)


def data_driven_iteration(
    graph: CsrGraph,
    state: ColorState,
    wl: Worklist,
    round_no: int,
    *,
    workers: int = 1,
    chunk_size: int = 1024,
    kernels=None,
) -> RoundOutcome:
    """One round iterating only the worklist; wl.current must hold exactly the
    uncolored nodes. Swaps the worklist before returning."""
    k = kernels if kernels is not None else _backend.kernels
    nodes = wl.current
    k.assign_from_list(
        graph.row_offsets, graph.col_indices,
        state.colors_read, state.colors_write, state.active_stamp,
        nodes, round_no, graph.max_degree, workers, chunk_size,
    )
    _commit_list(state, nodes)
    conflicts = int(
        k.resolve_from_list(
            graph.row_offsets, graph.col_indices,
            state.colors_read, state.colors_write, state.active_stamp,
            nodes, round_no, wl.next_storage, wl.cursor, workers, chunk_size,
        )
    )
    _commit_list(state, nodes)
    pushed = wl.swap_and_sort()
    return RoundOutcome(len(nodes) - pushed, pushed, conflicts)


def topology_driven_iteration(
    graph: CsrGraph,
    state: ColorState,
    wl: Worklist,
    round_no: int,
    *,
    workers: int = 1,
    chunk_size: int = 1024,
    kernels=None,
) -> RoundOutcome:
    """One round sweeping all nodes; activity is colors_read[u] == 0, so the
    incoming wl.current may be stale. Final state matches the data-driven
    round on the same inputs; the worklist is still maintained."""
    k = kernels if kernels is not None else _backend.kernels
    processed = int(
        k.assign_sweep(
            graph.row_offsets, graph.col_indices,
            state.colors_read, state.colors_write, state.active_stamp,
            round_no, graph.max_degree, workers, chunk_size,
        )
    )
    _commit_stamped(state, round_no)
    conflicts = int(
        k.resolve_sweep(
            graph.row_offsets, graph.col_indices,
            state.colors_read, state.colors_write, state.active_stamp,
            round_no, wl.next_storage, wl.cursor, workers, chunk_size,
        )
    )
    _commit_stamped(state, round_no)
    pushed = wl.swap_and_sort()
    return RoundOutcome(processed - pushed, pushed, conflicts)
