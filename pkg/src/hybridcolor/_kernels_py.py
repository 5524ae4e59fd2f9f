"""Pure-numpy kernel backend.

Drop-in replacement for the compiled extension: same functions, same
semantics, used when the extension is unavailable or when
HYBRIDCOLOR_KERNELS=python. Node batches are processed with vectorized
array passes instead of threads; `workers` and `chunk_size` are accepted
for signature parity but do not affect the result (no backend's do).

Push order into `next_ids` differs from the threaded backend, which is fine:
the worklist sorts at swap time.
"""

from __future__ import annotations

import numpy as np

from .graph import ID_DTYPE

NAME = "python"
PARALLEL = False


def _gather(row_offsets, col_indices, nodes):
    """Flatten the adjacency slices of `nodes`: (segment index, neighbor id)."""
    deg = row_offsets[nodes + 1] - row_offsets[nodes]
    total = int(deg.sum())
    if total == 0:
        empty = np.empty(0, dtype=ID_DTYPE)
        return empty, empty
    seg_start = np.cumsum(deg) - deg
    flat = (
        np.arange(total, dtype=ID_DTYPE)
        - np.repeat(seg_start, deg)
        + np.repeat(row_offsets[nodes], deg)
    )
    seg = np.repeat(np.arange(len(nodes), dtype=ID_DTYPE), deg)
    return seg, col_indices[flat]


def _mex_batch(row_offsets, col_indices, colors_read, nodes):
    """Smallest positive color absent from each node's neighbor colors.

    Per segment: sort the positive neighbor colors, drop duplicates, and count
    the leading run 1, 2, 3, ...; the mex is run length + 1. (After dedup the
    colors are strictly increasing, so c_j == j can only hold on a prefix.)
    """
    mex = np.ones(len(nodes), dtype=ID_DTYPE)
    seg, nbr = _gather(row_offsets, col_indices, nodes)
    if nbr.size == 0:
        return mex
    ncol = colors_read[nbr]
    positive = ncol > 0
    seg, ncol = seg[positive], ncol[positive]
    if seg.size == 0:
        return mex
    base = int(ncol.max()) + 2
    key = np.sort(seg * base + ncol)
    key = key[np.concatenate(([True], key[1:] != key[:-1]))]
    useg = key // base
    ucol = key - useg * base
    counts = np.bincount(useg, minlength=len(nodes))
    rank = np.arange(len(key), dtype=ID_DTYPE) - np.repeat(np.cumsum(counts) - counts, counts) + 1
    run = np.bincount(useg[ucol == rank], minlength=len(nodes))
    return mex + run


def _push_bulk(next_ids, cursor, ids):
    start = int(cursor[0])
    room = max(0, next_ids.shape[0] - start)
    next_ids[start : start + min(len(ids), room)] = ids[:room]
    cursor[0] = start + len(ids)


def assign_from_list(
    row_offsets, col_indices, colors_read, colors_write, stamp, nodes,
    round_no, max_degree, workers, chunk_size,
):
    if len(nodes) == 0:
        return
    colors_write[nodes] = _mex_batch(row_offsets, col_indices, colors_read, nodes)
    stamp[nodes] = round_no


def assign_sweep(
    row_offsets, col_indices, colors_read, colors_write, stamp,
    round_no, max_degree, workers, chunk_size,
):
    nodes = np.flatnonzero(colors_read == 0).astype(ID_DTYPE)
    assign_from_list(
        row_offsets, col_indices, colors_read, colors_write, stamp, nodes,
        round_no, max_degree, workers, chunk_size,
    )
    return len(nodes)


def _resolve(row_offsets, col_indices, colors_read, colors_write, stamp, nodes,
             round_no, next_ids, cursor):
    if len(nodes) == 0:
        return 0
    seg, nbr = _gather(row_offsets, col_indices, nodes)
    if nbr.size == 0:
        return 0
    owner = nodes[seg]
    conflict = (
        (nbr < owner)
        & (stamp[nbr] == round_no)
        & (colors_read[nbr] == colors_read[owner])
    )
    losers = nodes[np.bincount(seg[conflict], minlength=len(nodes)) > 0]
    colors_write[losers] = 0
    _push_bulk(next_ids, cursor, losers)
    return int(conflict.sum())


def resolve_from_list(
    row_offsets, col_indices, colors_read, colors_write, stamp, nodes,
    round_no, next_ids, cursor, workers, chunk_size,
):
    return _resolve(
        row_offsets, col_indices, colors_read, colors_write, stamp, nodes,
        round_no, next_ids, cursor,
    )


def resolve_sweep(
    row_offsets, col_indices, colors_read, colors_write, stamp,
    round_no, next_ids, cursor, workers, chunk_size,
):
    nodes = np.flatnonzero(stamp == round_no).astype(ID_DTYPE)
    return _resolve(
        row_offsets, col_indices, colors_read, colors_write, stamp, nodes,
        round_no, next_ids, cursor,
    )


def bench_from_list(nodes, active, cutoff, next_ids, cursor, workers, chunk_size):
    drop = nodes <= cutoff
    active[nodes[drop]] = 0
    _push_bulk(next_ids, cursor, nodes[~drop])


def bench_sweep(active, cutoff, next_ids, cursor, workers, chunk_size):
    nodes = np.flatnonzero(active).astype(ID_DTYPE)
    bench_from_list(nodes, active, cutoff, next_ids, cursor, workers, chunk_size)
