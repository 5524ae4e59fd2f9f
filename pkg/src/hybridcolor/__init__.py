"""Worklist-persistent parallel graph coloring.

Speculative round-synchronous coloring (assign the smallest free color,
uncolor the loser of every same-color edge, repeat) in three execution
modes: data-driven over the worklist, topology-driven over all nodes, and
a hybrid that picks per round based on worklist size. The worklist is
maintained in every mode. Ships with a worklist-vs-sweep micro-benchmark
harness and a CLI.
"""

from ._backend import available_backends, backend_name, get_kernels
from .bench import (
    BenchConfig,
    TtiRecord,
    TtiSeries,
    collect_deactivations,
    detect_crossovers,
    expected_iterations,
    run_push_bench,
    write_tti_csv,
)
from .coloring import (
    ColorState,
    RoundOutcome,
    assign_color,
    data_driven_iteration,
    mex_positive,
    resolve_conflicts,
    topology_driven_iteration,
)
from .driver import (
    MODES,
    HybridConfig,
    RoundRecord,
    RunReport,
    color_graph,
    colors_used,
    verify_coloring,
)
from .graph import (
    CsrGraph,
    DegreeStats,
    EdgeList,
    MatrixMarketError,
    build_csr,
    degree_stats,
    load_csr_cache,
    load_graph,
    parse_matrix_market,
    save_csr_cache,
)
from .worklist import Worklist, init_full

__version__ = "0.1.0"

__all__ = [
    "available_backends", "backend_name", "get_kernels",
    "BenchConfig", "TtiRecord", "TtiSeries", "collect_deactivations",
    "detect_crossovers", "expected_iterations", "run_push_bench", "write_tti_csv",
    "ColorState", "RoundOutcome", "assign_color", "data_driven_iteration",
    "mex_positive", "resolve_conflicts", "topology_driven_iteration",
    "MODES", "HybridConfig", "RoundRecord", "RunReport",
    "color_graph", "colors_used", "verify_coloring",
    "CsrGraph", "DegreeStats", "EdgeList", "MatrixMarketError",
    "build_csr", "degree_stats", "load_csr_cache", "load_graph",
    "parse_matrix_market", "save_csr_cache",
    "Worklist", "init_full",
    "__version__",
]
