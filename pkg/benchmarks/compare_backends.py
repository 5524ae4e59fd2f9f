#!/usr/bin/env python3
"""Compare the compiled and pure-numpy kernel backends on one random graph.

Checks that both produce bitwise-identical colorings, then reports wall time
per backend for each execution mode plus the push micro-benchmark pair.

    python3 benchmarks/compare_backends.py --nodes 500000 --avg-degree 8 --workers 4
"""

import argparse
import time

import numpy as np

from hybridcolor import (
    BenchConfig,
    EdgeList,
    HybridConfig,
    available_backends,
    build_csr,
    color_graph,
    get_kernels,
    run_push_bench,
)


def make_graph(n, avg_degree, seed):
    rng = np.random.default_rng(seed)
    m = n * avg_degree // 2
    edges = np.column_stack([rng.integers(0, n, m), rng.integers(0, n, m)])
    return build_csr(EdgeList(n, edges))


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--nodes", type=int, default=200_000)
    parser.add_argument("--avg-degree", type=int, default=8)
    parser.add_argument("--workers", type=int, default=4)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    graph = make_graph(args.nodes, args.avg_degree, args.seed)
    print(
        f"graph: {graph.num_nodes} nodes, {graph.num_undirected_edges} undirected edges, "
        f"max degree {graph.max_degree}"
    )
    print(f"backends: {', '.join(available_backends())}\n")

    header = f"{'benchmark':<22}" + "".join(f"{b:>12}" for b in available_backends())
    print(header)
    print("-" * len(header))

    reference = None
    for mode in ("data", "topo", "hybrid"):
        row = f"color --mode {mode:<8}"
        for backend in available_backends():
            kernels = get_kernels(backend)
            config = HybridConfig(mode=mode, workers=args.workers)
            t0 = time.perf_counter()
            colors, report = color_graph(graph, config, kernels=kernels)
            dt = time.perf_counter() - t0
            assert report.valid
            if reference is None:
                reference = colors
            assert np.array_equal(colors, reference), "backends disagree"
            row += f"{dt * 1e3:>10.1f}ms"
        print(row)

    for variant in ("push_wl", "push_nowl"):
        row = f"bench {variant:<15}"
        for backend in available_backends():
            kernels = get_kernels(backend)
            config = BenchConfig(batch_size=1000, variant=variant, repetitions=3)
            t0 = time.perf_counter()
            run_push_bench(graph, config, workers=args.workers, kernels=kernels)
            row += f"{(time.perf_counter() - t0) * 1e3:>10.1f}ms"
        print(row)

    print("\nall backends produced identical colorings")


if __name__ == "__main__":
    main()
