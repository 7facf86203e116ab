"""Exact Move-Split-Merge distance.

The MSM metric (Stefan, Athitsos & Das, 2013) measures the minimal total
cost of transforming one series into another with move (cost = shift
magnitude), split, and merge operations (cost = the constant ``c`` each).

`msm` is the production path: a single row buffer over the longer series.
`msm_table` fills and returns the whole table and serves as the reference
for everything else in this package.
"""

from __future__ import annotations

import numpy as np

from ._kernels import _msm_rowbuf, _msm_table
from .core import as_series, check_cost


def msm_table(x, y, c: float = 0.5) -> tuple[float, np.ndarray]:
    """MSM distance plus the full (m+1) x (n+1) cost table.

    Entry [i, j] of the table is the cost of transforming the first i
    points of ``x`` into the first j points of ``y``; row/column 0 hold the
    unreachable-border sentinel except [0, 0] = 0.

    :param x: first series
    :param y: second series
    :param c: nonnegative split/merge cost
    :return: (distance, table)
    """
    a = as_series(x)
    b = as_series(y)
    c = check_cost(c)
    table = _msm_table(a, b, c)
    return float(table[a.shape[0], b.shape[0]]), table


def msm(x, y, c: float = 0.5) -> float:
    """MSM distance via a row buffer of length min(m, n) + 1.

    Rows run over the longer series (the metric is symmetric, so the
    arguments may be swapped freely); equal lengths keep the given order.

    :param x: first series
    :param y: second series
    :param c: nonnegative split/merge cost
    """
    a = as_series(x)
    b = as_series(y)
    c = check_cost(c)
    if b.shape[0] > a.shape[0]:
        a, b = b, a
    return float(_msm_rowbuf(a, b, c))
