# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled kernel backend: OpenMP-parallel loops over the CSR arrays.

Workers own static chunks of the processed range; per-node writes are
disjoint, worklist pushes go through one atomic fetch-add cursor, and all
color reads hit the round's read snapshot only, so results are identical
for any worker count.
"""

import numpy as np

from cython.parallel cimport prange
from libc.stdint cimport int64_t, uint8_t
from openmp cimport omp_get_thread_num

cdef extern from *:
    """
    #include <stdint.h>
    static inline int64_t hc_fetch_add(int64_t *p) {
        return __atomic_fetch_add(p, (int64_t)1, __ATOMIC_RELAXED);
    }
    """
    int64_t hc_fetch_add(int64_t *p) nogil

NAME = "cython"
PARALLEL = True


def assign_from_list(
    const int64_t[::1] row_offsets, const int64_t[::1] col_indices,
    const int64_t[::1] colors_read, int64_t[::1] colors_write, int64_t[::1] stamp,
    const int64_t[::1] nodes, int64_t round_no, int64_t max_degree,
    int workers, Py_ssize_t chunk_size,
):
    cdef Py_ssize_t m = nodes.shape[0]
    if m == 0:
        return
    # per-thread mark rows; a node's tag (u+1) is unique within the call, so
    # rows never need clearing between nodes
    scratch_arr = np.zeros((workers, max_degree + 2), dtype=np.int64)
    cdef int64_t[:, ::1] scratch = scratch_arr
    cdef Py_ssize_t i
    cdef int64_t u, tag, c, lim, k, col
    cdef int tid
    for i in prange(m, nogil=True, num_threads=workers, schedule="static", chunksize=chunk_size):
        tid = omp_get_thread_num()
        u = nodes[i]
        tag = u + 1
        lim = row_offsets[u + 1] - row_offsets[u] + 1
        for k in range(row_offsets[u], row_offsets[u + 1]):
            c = colors_read[col_indices[k]]
            if 1 <= c <= lim:
                scratch[tid, c] = tag
        col = 1
        while scratch[tid, col] == tag:
            col = col + 1
        colors_write[u] = col
        stamp[u] = round_no


def assign_sweep(
    const int64_t[::1] row_offsets, const int64_t[::1] col_indices,
    const int64_t[::1] colors_read, int64_t[::1] colors_write, int64_t[::1] stamp,
    int64_t round_no, int64_t max_degree,
    int workers, Py_ssize_t chunk_size,
):
    cdef Py_ssize_t n = colors_read.shape[0]
    if n == 0:
        return 0
    scratch_arr = np.zeros((workers, max_degree + 2), dtype=np.int64)
    cdef int64_t[:, ::1] scratch = scratch_arr
    cdef Py_ssize_t u
    cdef int64_t processed = 0
    cdef int64_t tag, c, lim, k, col
    cdef int tid
    for u in prange(n, nogil=True, num_threads=workers, schedule="static", chunksize=chunk_size):
        if colors_read[u] == 0:
            tid = omp_get_thread_num()
            tag = u + 1
            lim = row_offsets[u + 1] - row_offsets[u] + 1
            for k in range(row_offsets[u], row_offsets[u + 1]):
                c = colors_read[col_indices[k]]
                if 1 <= c <= lim:
                    scratch[tid, c] = tag
            col = 1
            while scratch[tid, col] == tag:
                col = col + 1
            colors_write[u] = col
            stamp[u] = round_no
            processed += 1
    return processed


def resolve_from_list(
    const int64_t[::1] row_offsets, const int64_t[::1] col_indices,
    const int64_t[::1] colors_read, int64_t[::1] colors_write, int64_t[::1] stamp,
    const int64_t[::1] nodes, int64_t round_no,
    int64_t[::1] next_ids, int64_t[::1] cursor,
    int workers, Py_ssize_t chunk_size,
):
    cdef Py_ssize_t m = nodes.shape[0]
    cdef int64_t cap = next_ids.shape[0]
    cdef int64_t conflicts = 0
    cdef Py_ssize_t i
    cdef int64_t u, cu, cnt, k, v, pos
    for i in prange(m, nogil=True, num_threads=workers, schedule="static", chunksize=chunk_size):
        u = nodes[i]
        cu = colors_read[u]
        cnt = 0
        for k in range(row_offsets[u], row_offsets[u + 1]):
            v = col_indices[k]
            if v < u and stamp[v] == round_no and colors_read[v] == cu:
                cnt = cnt + 1
        if cnt > 0:
            colors_write[u] = 0
            pos = hc_fetch_add(&cursor[0])
            if pos < cap:
                next_ids[pos] = u
        conflicts += cnt
    return conflicts


def resolve_sweep(
    const int64_t[::1] row_offsets, const int64_t[::1] col_indices,
    const int64_t[::1] colors_read, int64_t[::1] colors_write, int64_t[::1] stamp,
    int64_t round_no,
    int64_t[::1] next_ids, int64_t[::1] cursor,
    int workers, Py_ssize_t chunk_size,
):
    cdef Py_ssize_t n = colors_read.shape[0]
    cdef int64_t cap = next_ids.shape[0]
    cdef int64_t conflicts = 0
    cdef Py_ssize_t u
    cdef int64_t cu, cnt, k, v, pos
    for u in prange(n, nogil=True, num_threads=workers, schedule="static", chunksize=chunk_size):
        if stamp[u] == round_no:
            cu = colors_read[u]
            cnt = 0
            for k in range(row_offsets[u], row_offsets[u + 1]):
                v = col_indices[k]
                if v < u and stamp[v] == round_no and colors_read[v] == cu:
                    cnt = cnt + 1
            if cnt > 0:
                colors_write[u] = 0
                pos = hc_fetch_add(&cursor[0])
                if pos < cap:
                    next_ids[pos] = u
            conflicts += cnt
    return conflicts


def bench_from_list(
    const int64_t[::1] nodes, uint8_t[::1] active, int64_t cutoff,
    int64_t[::1] next_ids, int64_t[::1] cursor,
    int workers, Py_ssize_t chunk_size,
):
    cdef Py_ssize_t m = nodes.shape[0]
    cdef int64_t cap = next_ids.shape[0]
    cdef Py_ssize_t i
    cdef int64_t u, pos
    for i in prange(m, nogil=True, num_threads=workers, schedule="static", chunksize=chunk_size):
        u = nodes[i]
        if u <= cutoff:
            active[u] = 0
        else:
            pos = hc_fetch_add(&cursor[0])
            if pos < cap:
                next_ids[pos] = u


def bench_sweep(
    uint8_t[::1] active, int64_t cutoff,
    int64_t[::1] next_ids, int64_t[::1] cursor,
    int workers, Py_ssize_t chunk_size,
):
    cdef Py_ssize_t n = active.shape[0]
    cdef int64_t cap = next_ids.shape[0]
    cdef Py_ssize_t u
    cdef int64_t pos
    for u in prange(n, nogil=True, num_threads=workers, schedule="static", chunksize=chunk_size):
        if active[u] != 0:
            if u <= cutoff:
                active[u] = 0
            else:
                pos = hc_fetch_add(&cursor[0])
                if pos < cap:
                    next_ids[pos] = u
