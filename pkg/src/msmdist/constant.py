"""Linear-time exact MSM distance against a constant series.

When one series is constant, an optimal transformation merges runs of
points whose deviations from the constant all reach twice the split/merge
cost and moves everything else, which collapses the quadratic table to one
reverse-order pass.
"""

from __future__ import annotations

import numpy as np

from ._kernels import _constant_suffix
from .core import as_series, check_cost


def constant_suffix_costs(x, q: float, c: float = 0.5) -> np.ndarray:
    """Suffix cost table of ``x`` against the constant series of value ``q``.

    Returns an array of length m+1 where entry ``k`` is the exact MSM
    distance between ``x[k:]`` and a constant series of the same length,
    filled back to front; the trailing 0 lets callers index one past the
    end without branching.  Entry 0 equals ``constant_msm(x, q, c)``.
    """
    arr = as_series(x)
    c = check_cost(c)
    return _constant_suffix(arr, float(q), c)


def constant_msm(x, q: float, c: float = 0.5) -> float:
    """Exact MSM distance between ``x`` and the constant series of value ``q``.

    Equivalent to ``msm(x, [q] * len(x), c)`` but O(len(x)).
    """
    arr = as_series(x)
    c = check_cost(c)
    return float(_constant_suffix(arr, float(q), c)[0])
