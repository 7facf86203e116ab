"""Dynamic time warping baseline, plain and pruned.

Kept deliberately standard: squared pointwise cost by default (absolute
available for shape comparison with MSM's move cost), no window, and the
same start/end row pruning as the MSM side with the prefix cost alone
deciding -- DTW step costs are nonnegative, so a prefix above the upper
bound can never recover.
"""

from __future__ import annotations

import math
import time

from ._kernels import _dtw_path_ub, _dtw_rowbuf, _pruned_dtw
from .core import PruneStats, as_series


def dtw(x, y, squared: bool = True) -> float:
    """DTW distance (sum of pointwise costs along the best warping path)."""
    a = as_series(x)
    b = as_series(y)
    return float(_dtw_rowbuf(a, b, squared))


def dtw_path_bound(x, y, squared: bool = True) -> float:
    """Cost of the rounded slanted-diagonal path; a cheap valid upper bound."""
    a = as_series(x)
    b = as_series(y)
    return float(_dtw_path_ub(a, b, squared))


def pruned_dtw(x, y, squared: bool = True, ub: float | None = None) -> tuple[float, PruneStats]:
    """DTW with row pruning against an upper bound.

    ``ub=None`` prices the slanted-diagonal path (always valid),
    ``math.inf`` disables pruning, and an explicit number is trusted --
    the caller must guarantee it is a true upper bound.
    """
    t0 = time.perf_counter_ns()
    a = as_series(x)
    b = as_series(y)
    ub0 = float(_dtw_path_ub(a, b, squared)) if ub is None else float(ub)
    value, cells, ub_final = _pruned_dtw(a, b, squared, ub0)
    stats = PruneStats(
        cells_computed=int(cells),
        cells_total=a.shape[0] * b.shape[0],
        ub_initial=ub0,
        ub_final=float(ub_final),
        elapsed_ns=time.perf_counter_ns() - t0,
    )
    return float(value), stats
