"""Shared series handling, the split/merge step cost, and z-normalization.

Series are plain one-dimensional float64 numpy arrays.  Formulas in the
docstrings use the conventional 1-based positions x_1..x_m; arrays are
stored 0-based as usual.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

#: Border marker for unreachable dynamic-programming cells.  The largest
#: finite double keeps min() and comparisons well defined; adding further
#: step costs saturates without producing NaN.
SENTINEL = float(np.finfo(np.float64).max)


class InfeasibleRegionError(ValueError):
    """A band or parallelogram constraint leaves no path to the final cell."""


class DatasetFormatError(ValueError):
    """A dataset file is malformed; the message names the offending line."""


def as_series(values) -> np.ndarray:
    """Validate and convert a series to a contiguous float64 array.

    :param values: array-like of real numbers, length >= 1
    :raises ValueError: on empty input or non-finite values
    """
    arr = np.ascontiguousarray(values, dtype=np.float64)
    if arr.ndim != 1:
        arr = arr.ravel()
    if arr.shape[0] == 0:
        raise ValueError("time series must contain at least one point")
    if not np.all(np.isfinite(arr)):
        raise ValueError("time series values must be finite")
    return arr


def check_cost(c) -> float:
    """Validate the split/merge cost constant (must be >= 0)."""
    c = float(c)
    if not math.isfinite(c) or c < 0.0:
        raise ValueError("split/merge cost c must be a nonnegative finite number")
    return c


def split_merge_cost(value: float, prev: float, target: float, c: float) -> float:
    """Cost of attaching `value` between `prev` and `target` via split/merge.

    Returns ``c`` when `value` lies between its neighbours
    (``prev <= value <= target`` or ``prev >= value >= target``), otherwise
    ``c + min(|value - prev|, |value - target|)``.  Always >= c.
    """
    if prev <= value <= target or prev >= value >= target:
        return c
    return c + min(abs(value - prev), abs(value - target))


def z_normalize(x) -> np.ndarray:
    """Shift a series to mean 0 and scale to unit standard deviation.

    Uses the population standard deviation.  Series with (near-)zero
    variance map to all zeros instead of blowing up.
    """
    arr = as_series(x)
    sd = float(arr.std())
    if sd < 1e-12:
        return np.zeros_like(arr)
    return (arr - arr.mean()) / sd


@dataclass(frozen=True)
class PruneStats:
    """Instrumentation record returned by the pruned algorithms.

    cells_computed / cells_total track how much of the m*n table was
    actually filled; ub_initial/ub_final are the upper bound before and
    after any in-run tightening; elapsed_ns is wall time on a monotonic
    clock.
    """

    cells_computed: int
    cells_total: int
    ub_initial: float
    ub_final: float
    elapsed_ns: int

    @property
    def prune_ratio(self) -> float:
        """Fraction of table cells skipped, in [0, 1]."""
        if self.cells_total == 0:
            return 0.0
        return 1.0 - self.cells_computed / self.cells_total
