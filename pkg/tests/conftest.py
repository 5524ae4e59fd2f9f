"""Shared graph builders and an independent reference coloring.

The reference implementation below deliberately avoids the library's state
machinery (plain dicts and sets, no numpy) so kernel results can be checked
against a second route.
"""

from __future__ import annotations

import itertools

import numpy as np
import pytest

from hybridcolor import EdgeList, available_backends, build_csr, get_kernels


def csr_from_edges(n, edges):
    return build_csr(EdgeList(n, list(edges)))


def path_graph(k):
    return csr_from_edges(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k):
    return csr_from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def grid_graph(rows, cols):
    def nid(i, j):
        return i * cols + j

    edges = []
    for i in range(rows):
        for j in range(cols):
            if i + 1 < rows:
                edges.append((nid(i, j), nid(i + 1, j)))
            if j + 1 < cols:
                edges.append((nid(i, j), nid(i, j + 1)))
    return csr_from_edges(rows * cols, edges)


def clique_graph(k):
    return csr_from_edges(k, itertools.combinations(range(k), 2))


def star_graph(k):
    """Hub 0 plus k leaves."""
    return csr_from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def er_graph(rng, n, p):
    """Random graph: binomial edge count, endpoints uniform (dupes/loops
    are build_csr's problem)."""
    m = rng.binomial(n * (n - 1) // 2, p) if n > 1 else 0
    src = rng.integers(0, n, size=m)
    dst = rng.integers(0, n, size=m)
    return csr_from_edges(n, np.column_stack([src, dst]))


def adjacency_sets(graph):
    return [set(graph.neighbors(u).tolist()) for u in range(graph.num_nodes)]


def check_csr_invariants(graph):
    ro, ci = graph.row_offsets, graph.col_indices
    assert ro[0] == 0 and ro[-1] == graph.num_edges
    assert (np.diff(ro) >= 0).all()
    assert len(ro) == graph.num_nodes + 1
    adj = adjacency_sets(graph)
    for u in range(graph.num_nodes):
        nbrs = graph.neighbors(u)
        assert u not in adj[u], "self loop"
        assert len(nbrs) == len(adj[u]), "duplicate neighbor"
        assert (np.diff(nbrs) > 0).all() if len(nbrs) > 1 else True, "unsorted adjacency"
        for v in nbrs:
            assert u in adj[v], "asymmetric edge"


def reference_color(graph):
    """From-scratch synchronous speculative coloring; lower id survives a
    conflict. Returns (colors list, per-round worklist sizes)."""
    adj = adjacency_sets(graph)
    n = graph.num_nodes
    colors = [0] * n
    active = set(range(n))
    trajectory = []
    while active:
        trajectory.append(len(active))
        tentative = {}
        for u in active:
            forbidden = {colors[v] for v in adj[u]}
            c = 1
            while c in forbidden:
                c += 1
            tentative[u] = c
        losers = set()
        for u in active:
            for v in adj[u]:
                if v < u and v in tentative and tentative[v] == tentative[u]:
                    losers.add(u)
                    break
        for u in active:
            colors[u] = 0 if u in losers else tentative[u]
        active = losers
    return colors, trajectory


@pytest.fixture(params=available_backends())
def kernels(request):
    """Every test using this fixture runs once per available kernel backend."""
    return get_kernels(request.param)
