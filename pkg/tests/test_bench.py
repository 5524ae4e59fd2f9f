import io
import math

import numpy as np
import pytest

from hybridcolor import (
    BenchConfig,
    TtiRecord,
    TtiSeries,
    collect_deactivations,
    detect_crossovers,
    expected_iterations,
    run_push_bench,
    write_tti_csv,
)

from conftest import csr_from_edges, er_graph


def series(variant, micros):
    return TtiSeries(
        variant,
        [TtiRecord(t, 0, m, m, 0.0) for t, m in enumerate(micros)],
    )


class TestBenchConfig:
    def test_defaults(self):
        cfg = BenchConfig()
        assert cfg.batch_size == 1000 and cfg.repetitions == 10

    def test_validation(self):
        with pytest.raises(ValueError):
            BenchConfig(batch_size=0)
        with pytest.raises(ValueError):
            BenchConfig(repetitions=0)
        with pytest.raises(ValueError):
            BenchConfig(variant="push_maybe")


class TestRunPushBench:
    @pytest.mark.parametrize("variant", ["push_wl", "push_nowl"])
    def test_iteration_arithmetic_n2500(self, variant, kernels):
        g = csr_from_edges(2500, [])
        s = run_push_bench(g, BenchConfig(variant=variant, repetitions=2), kernels=kernels)
        assert [r.active_before for r in s.per_iteration] == [2500, 1500, 500]
        assert s.iterations() == [0, 1, 2]

    def test_single_batch(self, kernels):
        g = csr_from_edges(1000, [])
        s = run_push_bench(g, BenchConfig(repetitions=1), kernels=kernels)
        assert len(s.per_iteration) == 1

    def test_batch_larger_than_n(self, kernels):
        g = csr_from_edges(10, [])
        s = run_push_bench(g, BenchConfig(batch_size=1000, repetitions=1), kernels=kernels)
        assert len(s.per_iteration) == 1

    def test_timing_fields_sane(self, kernels):
        g = csr_from_edges(500, [])
        s = run_push_bench(g, BenchConfig(batch_size=100, repetitions=3), kernels=kernels)
        for r in s.per_iteration:
            assert r.micros_mean >= r.micros_min >= 0.0
            assert r.micros_std >= 0.0

    def test_equal_work_and_lowest_id_batches(self, kernels):
        rng = np.random.default_rng(2)
        for n, batch in [(25, 10), (230, 100), (1000, 1000)]:
            g = er_graph(rng, n, 0.05)
            wl = collect_deactivations(g, BenchConfig(batch_size=batch, variant="push_wl"),
                                       kernels=kernels)
            nowl = collect_deactivations(g, BenchConfig(batch_size=batch, variant="push_nowl"),
                                         kernels=kernels)
            assert len(wl) == len(nowl) == expected_iterations(n, batch)
            for t, (a, b) in enumerate(zip(wl, nowl)):
                assert np.array_equal(a, b)
                # iteration t kills ids [t*batch, min((t+1)*batch, n))
                assert a.tolist() == list(range(t * batch, min((t + 1) * batch, n)))

    def test_worklist_sizes_follow_formula(self, kernels):
        n, batch = 950, 300
        g = csr_from_edges(n, [])
        s = run_push_bench(g, BenchConfig(batch_size=batch, repetitions=1), kernels=kernels)
        for t, r in enumerate(s.per_iteration):
            assert r.active_before == max(0, n - t * batch)


class TestDetectCrossovers:
    def test_single_crossover(self):
        wl = series("push_wl", [5.0, 5.0, 5.0])
        nowl = series("push_nowl", [3.0, 3.0, 8.0])
        assert detect_crossovers(wl, nowl) == [2]

    def test_identical_series_no_crossover(self):
        wl = series("push_wl", [4.0, 4.0, 4.0])
        nowl = series("push_nowl", [4.0, 4.0, 4.0])
        assert detect_crossovers(wl, nowl) == []

    def test_dominance_no_crossover(self):
        assert detect_crossovers(series("push_wl", [9.0, 9.0]),
                                 series("push_nowl", [1.0, 1.0])) == []

    def test_zero_diff_counts_positive(self):
        # diff signs: [+ (zero), -] -> flip at 1
        wl = series("push_wl", [4.0, 5.0])
        nowl = series("push_nowl", [4.0, 3.0])
        assert detect_crossovers(wl, nowl) == [1]

    def test_mismatched_ranges_rejected(self):
        with pytest.raises(ValueError):
            detect_crossovers(series("push_wl", [1.0, 2.0]), series("push_nowl", [1.0]))


class TestCsvExport:
    def test_columns_and_rows(self, kernels):
        g = csr_from_edges(2500, [])
        out = [
            run_push_bench(g, BenchConfig(variant=v, repetitions=1), kernels=kernels)
            for v in ("push_wl", "push_nowl")
        ]
        buf = io.StringIO()
        write_tti_csv(buf, out)
        lines = buf.getvalue().strip().splitlines()
        assert lines[0] == "variant,iteration,active_before,micros_mean,micros_min,micros_std"
        assert len(lines) == 1 + 2 * math.ceil(2500 / 1000)
        assert lines[1].startswith("push_wl,0,2500,")
        assert lines[4].startswith("push_nowl,0,2500,")
