"""Cross-checks between the compiled and pure-numpy kernel backends."""

import numpy as np
import pytest

from hybridcolor import (
    BenchConfig,
    HybridConfig,
    available_backends,
    backend_name,
    collect_deactivations,
    color_graph,
    get_kernels,
)

from conftest import er_graph


def test_python_backend_always_available():
    assert "python" in available_backends()
    assert backend_name() in available_backends()


def test_get_kernels_rejects_unknown():
    with pytest.raises(ValueError, match="not available"):
        get_kernels("fortran")


def test_auto_prefers_compiled_when_present():
    if "cython" in available_backends():
        assert get_kernels("auto").NAME == "cython"
    else:
        assert get_kernels("auto").NAME == "python"


@pytest.mark.skipif(len(available_backends()) < 2, reason="compiled backend not built")
class TestBackendAgreement:
    def test_colorings_identical(self):
        rng = np.random.default_rng(101)
        ks = [get_kernels(b) for b in available_backends()]
        for _ in range(20):
            g = er_graph(rng, int(rng.integers(2, 300)), float(rng.choice([0.01, 0.05, 0.2])))
            results = [
                color_graph(g, HybridConfig(mode="hybrid"), kernels=k)[0] for k in ks
            ]
            for other in results[1:]:
                assert np.array_equal(results[0], other)

    def test_round_trajectories_identical(self):
        rng = np.random.default_rng(102)
        g = er_graph(rng, 400, 0.02)
        ks = [get_kernels(b) for b in available_backends()]
        trajectories = [
            [r.worklist_size_in for r in color_graph(g, kernels=k)[1].per_round]
            for k in ks
        ]
        assert all(t == trajectories[0] for t in trajectories)

    def test_bench_deactivations_identical(self):
        rng = np.random.default_rng(103)
        g = er_graph(rng, 777, 0.01)
        cfg = BenchConfig(batch_size=250, variant="push_nowl")
        per_backend = [
            collect_deactivations(g, cfg, kernels=get_kernels(b))
            for b in available_backends()
        ]
        for other in per_backend[1:]:
            assert len(other) == len(per_backend[0])
            assert all(np.array_equal(a, b) for a, b in zip(per_backend[0], other))


@pytest.mark.skipif("cython" not in available_backends(), reason="compiled backend not built")
class TestWorkerCounts:
    @pytest.mark.parametrize("workers", [4, 8])
    def test_colorings_identical_across_workers(self, workers):
        rng = np.random.default_rng(104)
        k = get_kernels("cython")
        for _ in range(8):
            g = er_graph(rng, 500, 0.02)
            base, _ = color_graph(g, HybridConfig(workers=1), kernels=k)
            ours, _ = color_graph(g, HybridConfig(workers=workers), kernels=k)
            assert np.array_equal(ours, base)

    @pytest.mark.parametrize("chunk_size", [1, 7, 4096])
    def test_chunk_size_does_not_change_colors(self, chunk_size):
        rng = np.random.default_rng(105)
        g = er_graph(rng, 300, 0.05)
        k = get_kernels("cython")
        base, _ = color_graph(g, HybridConfig(workers=1), kernels=k)
        ours, _ = color_graph(g, HybridConfig(workers=4, chunk_size=chunk_size), kernels=k)
        assert np.array_equal(base, ours)
