"""Built-in sanity suite: golden values plus an oracle-equivalence smoke run.

Covers the two worked examples every implementation must reproduce —
d((4,5,5,10),(10,7,8)) = 8.3 at c=0.1, and the constant-series suffix
table [13,13,10,10,8,5,2,1] for (5,8,5,2,1,2,4,4) against q=5 at c=1 —
then checks the row-buffer and pruned variants against the full-table
reference on seeded random pairs.
"""

from __future__ import annotations


import numpy as np

from .constant import constant_suffix_costs
from .exact import msm, msm_table
from .pruning import itakura_configs, pruned_msm, standard_configs

TOL = 1e-9

GOLDEN_X = (4.0, 5.0, 5.0, 10.0)
GOLDEN_Y = (10.0, 7.0, 8.0)
GOLDEN_C = 0.1
GOLDEN_D = 8.3

SUFFIX_X = (5.0, 8.0, 5.0, 2.0, 1.0, 2.0, 4.0, 4.0)
SUFFIX_Q = 5.0
SUFFIX_C = 1.0
SUFFIX_TABLE = (13.0, 13.0, 10.0, 10.0, 8.0, 5.0, 2.0, 1.0)


def _check_golden_distance() -> list[str]:
    failures = []
    d_classic, _ = msm_table(GOLDEN_X, GOLDEN_Y, GOLDEN_C)
    if abs(d_classic - GOLDEN_D) > TOL:
        failures.append(f"classic distance {d_classic!r} != {GOLDEN_D}")
    d_improved = msm(GOLDEN_X, GOLDEN_Y, GOLDEN_C)
    if abs(d_improved - GOLDEN_D) > TOL:
        failures.append(f"improved distance {d_improved!r} != {GOLDEN_D}")
    for idx, cfg in enumerate(standard_configs() + itakura_configs()):
        d_pruned, _ = pruned_msm(GOLDEN_X, GOLDEN_Y, GOLDEN_C, cfg)
        if abs(d_pruned - GOLDEN_D) > TOL:
            failures.append(f"pruned config #{idx} distance {d_pruned!r} != {GOLDEN_D}")
    return failures


def _check_golden_suffix_table() -> list[str]:
    table = constant_suffix_costs(SUFFIX_X, SUFFIX_Q, SUFFIX_C)
    got = tuple(table[: len(SUFFIX_X)])
    if any(abs(a - b) > 0.0 for a, b in zip(got, SUFFIX_TABLE)):
        return [f"suffix table {got} != {SUFFIX_TABLE}"]
    return []


def _check_oracle_smoke(cases: int = 50, seed: int = 1234) -> list[str]:
    failures = []
    rng = np.random.default_rng(seed)
    # a stride of 3 walks all four strategy dimensions of the 64-config matrix
    configs = standard_configs()[::3]
    c_grid = (0.0, 0.1, 0.5, 1.0)
    for k in range(cases):
        m = int(rng.integers(1, 65))
        n = int(rng.integers(1, 65))
        x = rng.uniform(-3.0, 3.0, m)
        y = rng.uniform(-3.0, 3.0, n)
        c = c_grid[k % len(c_grid)]
        ref, _ = msm_table(x, y, c)
        if abs(msm(x, y, c) - ref) > TOL:
            failures.append(f"case {k}: row-buffer value differs from reference")
        for idx, cfg in enumerate(configs):
            got, _ = pruned_msm(x, y, c, cfg)
            if abs(got - ref) > TOL:
                failures.append(f"case {k}: pruned config #{idx} differs from reference")
    return failures


def run_selftest(verbose: bool = True) -> bool:
    """Run all built-in checks; prints one line per check, returns pass/fail."""
    checks = [
        ("golden distance 8.3 (classic/improved/pruned matrix)", _check_golden_distance),
        ("golden constant-series suffix table", _check_golden_suffix_table),
        ("oracle equivalence smoke (50 seeded cases)", _check_oracle_smoke),
    ]
    ok = True
    for name, fn in checks:
        failures = fn()
        if verbose:
            print(f"[{'PASS' if not failures else 'FAIL'}] {name}")
            for msg in failures[:5]:
                print(f"    {msg}")
        ok = ok and not failures
    return ok
