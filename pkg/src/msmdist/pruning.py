"""Exact MSM distance with cell pruning.

A heuristic upper bound is computed up front; every table cell whose value
plus a lower bound on its remaining alignment cost exceeds that bound is
"over" and cannot lie on an optimal path.  Per-row start/end pointers skip
the leading run of over cells and abort rows early, an optional band caps
|row - col| at ceil(UB / c) (each step off the diagonal costs at least c),
and the bound itself can be tightened whenever the heuristic's own path
cell is computed.  The returned distance is exact under every
configuration; only the amount of work changes.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from ._kernels import _constant_suffix, _pruned_msm
from .core import PruneStats, as_series, check_cost
from .heuristics import greedy, itakura, sakoe_chiba, triangle

UB_SOURCES = ("greedy", "triangle", "sakoe", "itakura", "explicit", "infinite")
LB_MODES = {"none": 0, "ms": 1, "t": 2, "max": 3}


@dataclass(frozen=True)
class PruneConfig:
    """Strategy selection for `pruned_msm`.

    ub_source picks the upper-bound heuristic ("explicit" trusts ub_value,
    which the caller must guarantee is a true upper bound; "infinite"
    disables pruning).  ub_update tightens the bound along the heuristic's
    path, pruning_band caps |row - col| at ceil(UB/c), and lb chooses the
    per-cell lower bound: "ms" counts forced splits/merges, "t" applies
    the reverse triangle inequality through the constant series q, "max"
    takes "ms" first and "t" only for cells still alive.
    """

    ub_source: str = "greedy"
    ub_value: float = math.inf
    ub_update: bool = False
    pruning_band: bool = False
    lb: str = "none"
    q: float = 0.0
    band_b: int | None = None
    band_slanted: bool = True
    itakura_d: float = 2.0 / 3.0


def lb_ms(i: int, j: int, m: int, n: int, c: float) -> float:
    """Cost of the splits/merges still forced by the length mismatch.

    For 1-based cell (i, j): the remaining m-i and n-j points differ in
    count by |(m-i) - (n-j)|, and each balancing operation costs c.
    """
    return abs((m - i) - (n - j)) * c


def lb_t(i, j, dcx, dcy, x, y, q: float = 0.0, c: float = 0.5) -> float:
    """Reverse-triangle lower bound on the remaining cost at cell (i, j).

    ``dcx``/``dcy`` are `constant_suffix_costs` tables of both series for
    the reference value ``q``.  The correction term discounts move cost
    the transition into the suffix could save by merging across it.
    Indices are 1-based to match the table formulation.
    """
    m = len(x)
    n = len(y)
    diff = abs(dcx[i] - dcy[j] - ((m - i) - (n - j)) * c)
    if i == m and j == n:
        s = 0.0
    else:
        a = abs(x[i - 1] - q) + abs(y[j - 1] - q)
        s = max(a - c, 0.0) if (1 < i < m and 1 < j < n) else a
    return max(diff - s, 0.0)


def _update_path(cols0: np.ndarray) -> np.ndarray:
    """Columns where the bound may be updated: the heuristic suffix cost
    only completes an alignment when its path advances diagonally."""
    out = np.full(cols0.shape[0], -1, dtype=np.int64)
    advances = cols0[1:] == cols0[:-1] + 1
    out[:-1][advances] = cols0[:-1][advances]
    out[-1] = cols0[-1]
    return out


def _default_band(m: int) -> int:
    return max(1, int(round(0.1 * m)))


def pruned_msm(x, y, c: float = 0.5, config: PruneConfig | None = None) -> tuple[float, PruneStats]:
    """Exact MSM distance with pruning, plus instrumentation.

    Rows run over the longer series.  The distance equals `msm_table`'s
    value whatever the configuration; `PruneStats` records how many of the
    m*n cells were computed and how the upper bound evolved.

    :param x: first series
    :param y: second series
    :param c: nonnegative split/merge cost
    :param config: strategy selection, defaults to a plain greedy bound
    :raises InfeasibleRegionError: when a banded upper-bound heuristic has
        no feasible region for these lengths
    """
    cfg = config if config is not None else PruneConfig()
    t0 = time.perf_counter_ns()
    a = as_series(x)
    b = as_series(y)
    c = check_cost(c)
    if b.shape[0] > a.shape[0]:
        a, b = b, a
    m, n = a.shape[0], b.shape[0]

    if cfg.ub_source not in UB_SOURCES:
        raise ValueError(f"unknown ub_source {cfg.ub_source!r}")
    res = None
    if cfg.ub_source == "greedy":
        res = greedy(a, b, c)
    elif cfg.ub_source == "triangle":
        res = triangle(a, b, c, cfg.q)
    elif cfg.ub_source == "sakoe":
        bb = cfg.band_b if cfg.band_b is not None else _default_band(m)
        res = sakoe_chiba(a, b, c, bb, slanted=cfg.band_slanted)
    elif cfg.ub_source == "itakura":
        res = itakura(a, b, c, cfg.itakura_d)
    if res is not None:
        ub0 = res.value
    elif cfg.ub_source == "explicit":
        ub0 = float(cfg.ub_value)
    else:
        ub0 = math.inf

    path_cols = np.full(m, -1, dtype=np.int64)
    path_suffix = np.zeros(m + 1)
    if cfg.ub_update and res is not None:
        path_cols = _update_path(res.path_cols)
        path_suffix = res.suffix_path

    if cfg.lb not in LB_MODES:
        raise ValueError(f"unknown lb mode {cfg.lb!r}")
    lb_mode = LB_MODES[cfg.lb]
    if lb_mode >= 2:
        dcx = _constant_suffix(a, cfg.q, c)
        dcy = _constant_suffix(b, cfg.q, c)
    else:
        dcx = np.zeros(1)
        dcy = np.zeros(1)

    value, cells, ub_final = _pruned_msm(
        a, b, c, ub0, cfg.pruning_band, lb_mode, cfg.q, dcx, dcy, path_cols, path_suffix
    )
    stats = PruneStats(
        cells_computed=int(cells),
        cells_total=m * n,
        ub_initial=float(ub0),
        ub_final=float(ub_final),
        elapsed_ns=time.perf_counter_ns() - t0,
    )
    return float(value), stats


def standard_configs(q: float = 0.0) -> list[PruneConfig]:
    """Cross product of pruning strategies that stays feasible for any
    pair of lengths: every bound source except the parallelogram, with and
    without bound updating and the band, across all lower-bound modes."""
    out = []
    for src in ("greedy", "triangle", "sakoe", "infinite"):
        for upd in (False, True):
            for band in (False, True):
                for lb in ("none", "ms", "t", "max"):
                    out.append(
                        PruneConfig(
                            ub_source=src,
                            ub_update=upd,
                            pruning_band=band,
                            lb=lb,
                            q=q,
                            band_slanted=True,
                        )
                    )
    return out


def itakura_configs(q: float = 0.0, d: float = 2.0 / 3.0) -> list[PruneConfig]:
    """Parallelogram-bound variants; feasible when lengths are similar."""
    out = []
    for upd in (False, True):
        for band in (False, True):
            for lb in ("none", "ms", "t", "max"):
                out.append(
                    PruneConfig(
                        ub_source="itakura",
                        itakura_d=d,
                        ub_update=upd,
                        pruning_band=band,
                        lb=lb,
                        q=q,
                    )
                )
    return out
