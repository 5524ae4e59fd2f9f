"""Graph loading and preprocessing.

Graphs enter as Matrix Market coordinate files (or a binary cache of a
previous load) and are normalized into an immutable symmetric CSR structure:
self loops dropped, duplicate edges collapsed, adjacency lists sorted
ascending so that downstream round simulations are byte-reproducible.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, TextIO

import numpy as np

ID_DTYPE = np.int64

CACHE_FORMAT_VERSION = 1


class MatrixMarketError(ValueError):
    """Malformed or out-of-contract Matrix Market input."""


@dataclass
class EdgeList:
    """Raw parse result: declared node count plus zero-based (src, dst) pairs."""

    num_nodes_declared: int
    edges: np.ndarray

    def __post_init__(self):
        self.edges = np.asarray(self.edges, dtype=ID_DTYPE).reshape(-1, 2)
        if self.num_nodes_declared < 0:
            raise ValueError("declared node count must be non-negative")
        if self.edges.size and (
            self.edges.min() < 0 or self.edges.max() >= self.num_nodes_declared
        ):
            raise ValueError("edge endpoint outside declared node range")

    @property
    def num_edges(self) -> int:
        return self.edges.shape[0]


@dataclass
class CsrGraph:
    """Symmetric CSR adjacency after preprocessing.

    num_edges counts directed half-edges (2x the undirected edge count).
    Arrays are frozen after construction; the structure is safe for
    concurrent reads from any number of workers.
    """

    num_nodes: int
    num_edges: int
    row_offsets: np.ndarray
    col_indices: np.ndarray

    def __post_init__(self):
        self.row_offsets = np.ascontiguousarray(self.row_offsets, dtype=ID_DTYPE)
        self.col_indices = np.ascontiguousarray(self.col_indices, dtype=ID_DTYPE)
        self.row_offsets.flags.writeable = False
        self.col_indices.flags.writeable = False

    @cached_property
    def degrees(self) -> np.ndarray:
        d = np.diff(self.row_offsets)
        d.flags.writeable = False
        return d

    @cached_property
    def max_degree(self) -> int:
        return int(self.degrees.max()) if self.num_nodes else 0

    @property
    def num_undirected_edges(self) -> int:
        return self.num_edges // 2

    def neighbors(self, u: int) -> np.ndarray:
        return self.col_indices[self.row_offsets[u] : self.row_offsets[u + 1]]

    def to_edge_list(self) -> EdgeList:
        """Re-extract one (u, v) pair per undirected edge (u < v side)."""
        src = np.repeat(np.arange(self.num_nodes, dtype=ID_DTYPE), self.degrees)
        keep = src < self.col_indices
        return EdgeList(
            self.num_nodes,
            np.column_stack((src[keep], self.col_indices[keep])),
        )


@dataclass
class DegreeStats:
    min_degree: int
    median_degree: int
    max_degree: int
    num_nodes: int
    num_undirected_edges: int


def parse_matrix_market(source: TextIO | Iterable[str] | str) -> EdgeList:
    """Parse a Matrix Market coordinate stream into an EdgeList.

    Coordinates are translated from 1-based to 0-based. Symmetric-marked
    files contribute one pair per listed coordinate; symmetrization is
    build_csr's job. Any numeric values after the coordinate pair are
    ignored. Comment lines (%) and blank lines are skipped.

    Raises MatrixMarketError for a malformed banner or size line,
    non-integer coordinates, coordinates outside the declared bounds, or
    an entry count that does not match the declared nonzero count.
    """
    if isinstance(source, str):
        source = io.StringIO(source)
    lines = iter(source)

    try:
        banner = next(lines)
    except StopIteration:
        raise MatrixMarketError("empty input: missing MatrixMarket banner") from None
    tokens = banner.split()
    if (
        len(tokens) < 3
        or tokens[0].lower() != "%%matrixmarket"
        or tokens[1].lower() != "matrix"
        or tokens[2].lower() != "coordinate"
    ):
        raise MatrixMarketError(
            f"malformed banner (expected '%%MatrixMarket matrix coordinate ...'): {banner.strip()!r}"
        )

    size_line = None
    for line in lines:
        stripped = line.strip()
        if not stripped or stripped.startswith("%"):
            continue
        size_line = stripped
        break
    if size_line is None:
        raise MatrixMarketError("missing size line")
    parts = size_line.split()
    if len(parts) != 3:
        raise MatrixMarketError(f"size line must be 'rows cols nnz': {size_line!r}")
    try:
        rows, cols, nnz = (int(p) for p in parts)
    except ValueError:
        raise MatrixMarketError(f"non-integer size line: {size_line!r}") from None
    if rows < 0 or cols < 0 or nnz < 0:
        raise MatrixMarketError(f"negative size entry: {size_line!r}")

    num_nodes = max(rows, cols)
    edges = np.empty((nnz, 2), dtype=ID_DTYPE)
    count = 0
    for line in lines:
        stripped = line.strip()
        if not stripped or stripped.startswith("%"):
            continue
        fields = stripped.split()
        if len(fields) < 2:
            raise MatrixMarketError(f"entry needs at least two coordinates: {stripped!r}")
        try:
            r, c = int(fields[0]), int(fields[1])
        except ValueError:
            raise MatrixMarketError(f"non-integer coordinate: {stripped!r}") from None
        if not (1 <= r <= rows and 1 <= c <= cols):
            raise MatrixMarketError(
                f"coordinate ({r}, {c}) outside declared bounds {rows}x{cols}"
            )
        if count >= nnz:
            raise MatrixMarketError(f"more than the declared {nnz} entries")
        edges[count, 0] = r - 1
        edges[count, 1] = c - 1
        count += 1
    if count != nnz:
        raise MatrixMarketError(f"declared {nnz} entries but found {count}")

    return EdgeList(num_nodes, edges)


def build_csr(edge_list: EdgeList) -> CsrGraph:
    """Symmetric closure of the edge list with self loops and duplicates removed."""
    n = edge_list.num_nodes_declared
    e = edge_list.edges
    if n == 0 or e.size == 0:
        return CsrGraph(n, 0, np.zeros(n + 1, dtype=ID_DTYPE), np.empty(0, dtype=ID_DTYPE))

    both = np.concatenate((e, e[:, ::-1]))
    both = both[both[:, 0] != both[:, 1]]
    # unique (src, dst) pairs via a scalar key; sorting the key groups by src
    # and orders each adjacency list ascending in one pass
    key = np.unique(both[:, 0] * n + both[:, 1])
    src = key // n
    dst = key - src * n

    row_offsets = np.zeros(n + 1, dtype=ID_DTYPE)
    np.cumsum(np.bincount(src, minlength=n), out=row_offsets[1:])
    return CsrGraph(n, dst.shape[0], row_offsets, dst)


def degree_stats(graph: CsrGraph) -> DegreeStats:
    """Min / median / max node degree; median is the sorted element at index n//2."""
    n = graph.num_nodes
    if n == 0:
        raise ValueError("degree statistics are undefined for an empty graph")
    deg = graph.degrees
    median = int(np.partition(deg, n // 2)[n // 2])
    return DegreeStats(
        min_degree=int(deg.min()),
        median_degree=median,
        max_degree=int(deg.max()),
        num_nodes=n,
        num_undirected_edges=graph.num_undirected_edges,
    )


def save_csr_cache(graph: CsrGraph, path: str | Path) -> None:
    """Write the preprocessed CSR to a versioned .npz cache."""
    np.savez(
        path,
        format_version=np.array([CACHE_FORMAT_VERSION], dtype=ID_DTYPE),
        num_nodes=np.array([graph.num_nodes], dtype=ID_DTYPE),
        row_offsets=graph.row_offsets,
        col_indices=graph.col_indices,
    )


def load_csr_cache(path: str | Path) -> CsrGraph:
    with np.load(path) as data:
        if "format_version" not in data:
            raise ValueError(f"{path}: not a CSR cache (missing format_version)")
        version = int(data["format_version"][0])
        if version != CACHE_FORMAT_VERSION:
            raise ValueError(
                f"{path}: cache format version {version} unsupported "
                f"(expected {CACHE_FORMAT_VERSION})"
            )
        row_offsets = data["row_offsets"]
        col_indices = data["col_indices"]
        return CsrGraph(int(data["num_nodes"][0]), col_indices.shape[0], row_offsets, col_indices)


def load_graph(path: str | Path) -> CsrGraph:
    """Load a graph from a .mtx file or a .npz CSR cache."""
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"graph file not found: {path}")
    if path.suffix == ".npz":
        return load_csr_cache(path)
    with open(path, "r", encoding="ascii") as fh:
        return build_csr(parse_matrix_market(fh))
