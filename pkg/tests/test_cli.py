import json
import subprocess
import sys
from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "hybridcolor", *map(str, args)],
        capture_output=True,
        text=True,
    )


def strip_timing(doc):
    """Drop every key ending in 'micros', recursively."""
    if isinstance(doc, dict):
        return {k: strip_timing(v) for k, v in doc.items() if not k.endswith("micros")}
    if isinstance(doc, list):
        return [strip_timing(v) for v in doc]
    return doc


class TestStats:
    def test_p3_layout(self):
        proc = run_cli("stats", DATA / "p3.mtx")
        assert proc.returncode == 0
        assert proc.stdout.strip() == "3 nodes, 2 edges, δ 1/1/2"

    def test_k3_layout(self):
        proc = run_cli("stats", DATA / "k3.mtx")
        assert proc.returncode == 0
        assert proc.stdout.strip() == "3 nodes, 3 edges, δ 2/2/2"

    def test_json_format(self):
        proc = run_cli("stats", DATA / "p3.mtx", "--format", "json")
        doc = json.loads(proc.stdout)
        assert doc["median_degree"] == 1 and doc["num_undirected_edges"] == 2

    def test_missing_file_names_path(self, tmp_path):
        missing = tmp_path / "ghost.mtx"
        proc = run_cli("stats", missing)
        assert proc.returncode == 2
        assert str(missing) in proc.stderr

    def test_malformed_file(self, tmp_path):
        bad = tmp_path / "bad.mtx"
        bad.write_text("not a matrix market file\n")
        proc = run_cli("stats", bad)
        assert proc.returncode == 2
        assert "banner" in proc.stderr


class TestColor:
    def test_k3_hybrid(self):
        proc = run_cli("color", DATA / "k3.mtx", "--mode", "hybrid")
        assert proc.returncode == 0
        assert "colors_used: 3" in proc.stdout
        assert "valid: true" in proc.stdout

    def test_data_and_topo_agree(self):
        outs = []
        for mode in ("data", "topo"):
            proc = run_cli("color", DATA / "p3.mtx", "--mode", mode, "--format", "json")
            assert proc.returncode == 0
            outs.append(json.loads(proc.stdout))
        assert outs[0]["colors_used"] == outs[1]["colors_used"] == 2
        assert outs[0]["total_rounds"] == outs[1]["total_rounds"] == 2

    def test_threshold_out_of_range_is_usage_error(self):
        proc = run_cli("color", DATA / "k3.mtx", "--threshold", "1.5")
        assert proc.returncode == 2

    def test_unknown_mode_is_usage_error(self):
        proc = run_cli("color", DATA / "k3.mtx", "--mode", "warp")
        assert proc.returncode == 2

    def test_report_written_to_out(self, tmp_path):
        out = tmp_path / "report.json"
        proc = run_cli("color", DATA / "k3.mtx", "--out", out)
        assert proc.returncode == 0
        doc = json.loads(out.read_text())
        assert doc["graph"] == "k3"
        assert doc["valid"] is True
        assert doc["config"]["mode"] == "hybrid"

    def test_unwritable_out_is_io_error(self, tmp_path):
        proc = run_cli("color", DATA / "k3.mtx", "--out", tmp_path / "no" / "dir" / "x.json")
        assert proc.returncode == 3

    def test_csv_format(self):
        proc = run_cli("color", DATA / "k3.mtx", "--format", "csv")
        lines = proc.stdout.strip().splitlines()
        assert lines[0] == "round,mode,wl_in,wl_out,conflicts,micros"
        assert len(lines) == 4

    def test_reports_byte_identical_modulo_timing(self, tmp_path):
        docs = []
        for name in ("a.json", "b.json"):
            out = tmp_path / name
            proc = run_cli("color", DATA / "k3.mtx", "--workers", "4", "--out", out)
            assert proc.returncode == 0
            docs.append(strip_timing(json.loads(out.read_text())))
        a, b = (json.dumps(d, sort_keys=True) for d in docs)
        assert a.encode() == b.encode()


class TestBench:
    def test_csv_rows_and_crossover_line(self, tmp_path):
        graph = tmp_path / "n25.mtx"
        graph.write_text("%%MatrixMarket matrix coordinate pattern general\n25 25 0\n")
        out = tmp_path / "tti.csv"
        proc = run_cli("bench", graph, "--batch", "10", "--reps", "2", "--out", out)
        assert proc.returncode == 0
        lines = out.read_text().strip().splitlines()
        assert len(lines) == 1 + 2 * 3  # header + 3 iterations per variant
        assert "deactivation sets identical across variants: yes" in proc.stdout
        assert "crossovers:" in proc.stdout

    def test_out_required(self, tmp_path):
        graph = tmp_path / "n10.mtx"
        graph.write_text("%%MatrixMarket matrix coordinate pattern general\n10 10 0\n")
        proc = run_cli("bench", graph)
        assert proc.returncode == 2

    def test_bench_csv_deterministic_modulo_timing(self, tmp_path):
        graph = tmp_path / "n30.mtx"
        graph.write_text("%%MatrixMarket matrix coordinate pattern general\n30 30 0\n")
        stripped = []
        for name in ("t1.csv", "t2.csv"):
            out = tmp_path / name
            assert run_cli("bench", graph, "--batch", "10", "--out", out).returncode == 0
            rows = [line.split(",")[:3] for line in out.read_text().splitlines()]
            stripped.append(rows)
        assert stripped[0] == stripped[1]


def test_cache_accepted_as_graph_input(tmp_path):
    from hybridcolor import load_graph, save_csr_cache

    cache = tmp_path / "k3.npz"
    save_csr_cache(load_graph(DATA / "k3.mtx"), cache)
    proc = run_cli("stats", cache)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "3 nodes, 3 edges, δ 2/2/2"
