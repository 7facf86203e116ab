"""Linear-time and banded upper bounds on the MSM distance.

Every function here returns a `HeuristicResult` whose ``value`` is a valid
upper bound on the exact distance: the triangle and greedy heuristics price
one explicit transformation, and the band/parallelogram variants restrict
the table, which can only raise the minimum.

``suffix_path`` holds the heuristic's remaining cost per row of the longer
series (trailing 0 sentinel) and ``path_cols`` the table column its
alignment passes through in each row; the pruned algorithm uses the pair
to tighten its upper bound on the fly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._kernels import _constant_suffix, _greedy_suffix, _windowed_msm
from .core import InfeasibleRegionError, as_series, check_cost


@dataclass(frozen=True)
class HeuristicResult:
    """An upper-bound value plus the row-wise remaining costs behind it.

    ``suffix_path[k]`` bounds the cost of completing the alignment from
    row k (0-based, over the longer series) along the heuristic's own
    path; ``suffix_path[m] = 0``.  ``path_cols[k]`` is the 0-based column
    of that path in row k.
    """

    value: float
    suffix_path: np.ndarray | None = None
    path_cols: np.ndarray | None = None


def _shifted_diag_cols(m: int, n: int) -> np.ndarray:
    # vertical run at column 0 for the length overhang, then slope-1 into
    # the corner: 1-based j(i) = max(1, n - (m - i))
    i1 = np.arange(1, m + 1, dtype=np.int64)
    return np.maximum(1, n - (m - i1)) - 1


def _slant_cols(m: int, n: int) -> np.ndarray:
    i1 = np.arange(1, m + 1, dtype=np.float64)
    cols = np.floor(i1 * (n / m) + 0.5)
    return np.clip(cols, 1, n).astype(np.int64) - 1


def triangle(x, y, c: float = 0.5, q: float = 0.0) -> HeuristicResult:
    """Upper bound via the constant series q: d(x,q) + d(y,q) + padding.

    Both inputs are compared against a constant series of value ``q`` in
    linear time; the length mismatch is padded with splits at cost c each.
    Tightest when ``q`` is close to both series (0 for normalized data).
    """
    a = as_series(x)
    b = as_series(y)
    c = check_cost(c)
    q = float(q)
    if b.shape[0] > a.shape[0]:
        a, b = b, a
    m, n = a.shape[0], b.shape[0]
    dcx = _constant_suffix(a, q, c)
    dcy = _constant_suffix(b, q, c)
    i1 = np.arange(1, m + 1, dtype=np.int64)
    jj = np.maximum(1, i1 - (m - n))
    mism = (m - i1 + 1) - (n - jj + 1)
    r = np.zeros(m + 1)
    r[:m] = dcx[:m] + dcy[jj - 1] + mism * c
    value = float(dcx[0] + dcy[0] + (m - n) * c)
    return HeuristicResult(value, r, _shifted_diag_cols(m, n))


def greedy(x, y, c: float = 0.5) -> HeuristicResult:
    """Upper bound from one reverse pass along the shifted diagonal.

    Pairs the tails of both series point by point, merging neighbours
    whenever both paired deviations reach 2c, and folds the length
    overhang onto the first point of the shorter series.
    """
    a = as_series(x)
    b = as_series(y)
    c = check_cost(c)
    if b.shape[0] > a.shape[0]:
        a, b = b, a
    g = _greedy_suffix(a, b, c)
    return HeuristicResult(float(g[0]), g, _shifted_diag_cols(a.shape[0], b.shape[0]))


def _check_windows(lo: np.ndarray, hi: np.ndarray, n: int) -> None:
    m = lo.shape[0]
    if lo[0] > 0:
        raise InfeasibleRegionError("window of the first row excludes the start cell")
    for i in range(m):
        if lo[i] > hi[i]:
            raise InfeasibleRegionError(f"window of row {i + 1} is empty")
        if i > 0 and lo[i] > hi[i - 1] + 1:
            raise InfeasibleRegionError(f"windows of rows {i} and {i + 1} do not connect")
    if lo[m - 1] > n - 1 or hi[m - 1] < n - 1:
        raise InfeasibleRegionError("window of the last row excludes the final cell")


def _sakoe_windows(m: int, n: int, b: int, slanted: bool) -> tuple[np.ndarray, np.ndarray]:
    if slanted:
        center = np.arange(1, m + 1, dtype=np.float64) * (n / m)
        lo = np.ceil(center - b) - 1
        hi = np.floor(center + b) - 1
    else:
        i0 = np.arange(m, dtype=np.float64)
        lo = i0 - b
        hi = i0 + b
    lo = np.maximum(lo, 0).astype(np.int64)
    hi = np.minimum(hi, n - 1).astype(np.int64)
    return lo, hi


def _itakura_windows(m: int, n: int, d: float) -> tuple[np.ndarray, np.ndarray]:
    i1 = np.arange(1, m + 1, dtype=np.float64)
    slope = n / m
    start = np.maximum(d * slope * i1, (slope / d) * i1 - ((1.0 - d) / d) * n)
    end = np.minimum((slope / d) * i1, d * slope * i1 + (1.0 - d) * n)
    lo = np.ceil(np.maximum(start, 1.0))
    hi = np.floor(np.minimum(end, n))
    # guard the corner against rounding: the last row always reaches column n
    lo[m - 1] = min(lo[m - 1], n)
    hi[m - 1] = n
    return lo.astype(np.int64) - 1, hi.astype(np.int64) - 1


def _banded_result(a, b, c, lo, hi, diag0) -> HeuristicResult:
    """Run the windowed recursion forward, then mirrored in reverse for the
    per-row suffix costs along ``diag0``."""
    m, n = a.shape[0], b.shape[0]
    nocap = np.full(m, -1, dtype=np.int64)
    value, _ = _windowed_msm(a, b, c, lo, hi, nocap)
    rlo = np.ascontiguousarray((n - 1) - hi[::-1])
    rhi = np.ascontiguousarray((n - 1) - lo[::-1])
    rcap = np.ascontiguousarray((n - 1) - diag0[::-1])
    _, captured = _windowed_msm(a[::-1].copy(), b[::-1].copy(), c, rlo, rhi, rcap)
    r = np.zeros(m + 1)
    r[:m] = captured[::-1]
    return HeuristicResult(float(value), r, diag0)


def sakoe_chiba(x, y, c: float, b: int, slanted: bool = False) -> HeuristicResult:
    """MSM restricted to a band of b cells on each side of the diagonal.

    The straight band keeps |row - col| <= b and needs b >= |m - n| to
    reach the final cell; the slanted variant follows the diagonal of
    slope n/m instead and handles unequal lengths naturally.  b at least
    max(m, n) reproduces the exact distance.  Rows run over the longer
    series; equal lengths keep the given order.

    :raises InfeasibleRegionError: when no in-band path reaches [m, n]
    """
    a = as_series(x)
    bb = as_series(y)
    c = check_cost(c)
    b = int(b)
    if b < 0:
        raise ValueError("band radius b must be >= 0")
    if bb.shape[0] > a.shape[0]:
        a, bb = bb, a
    m, n = a.shape[0], bb.shape[0]
    lo, hi = _sakoe_windows(m, n, b, slanted)
    _check_windows(lo, hi, n)
    if slanted:
        diag0 = np.clip(_slant_cols(m, n), lo, hi)
    else:
        diag0 = np.minimum(np.arange(m, dtype=np.int64), n - 1)
    return _banded_result(a, bb, c, lo, hi, diag0)


def itakura(x, y, c: float, d: float) -> HeuristicResult:
    """MSM restricted to a parallelogram around the slanted diagonal.

    ``d`` in (0, 1] scales the region: 1 keeps only the diagonal, smaller
    values open it up.  Rows run over the longer series and are clamped
    to [1, n]; start coordinates round up, end coordinates round down.

    :raises InfeasibleRegionError: when some row's range is empty or the
        region does not connect through to [m, n]
    """
    a = as_series(x)
    b = as_series(y)
    c = check_cost(c)
    d = float(d)
    if not 0.0 < d <= 1.0:
        raise ValueError("itakura parameter d must be in (0, 1]")
    if b.shape[0] > a.shape[0]:
        a, b = b, a
    m, n = a.shape[0], b.shape[0]
    lo, hi = _itakura_windows(m, n, d)
    _check_windows(lo, hi, n)
    diag0 = np.clip(_slant_cols(m, n), lo, hi)
    return _banded_result(a, b, c, lo, hi, diag0)
