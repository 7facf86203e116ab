"""Numba kernels for the dynamic programs.

All kernels take contiguous float64 arrays and work 0-based; the public
wrappers own validation, input orientation, and result packaging.  DP rows
run over the first argument.  Unreached cells carry ``SENTINEL`` (largest
finite double) so min() and comparisons stay NaN-free.
"""

import math

import numpy as np
from numba import njit

from .core import SENTINEL

# Pruning keeps cells whose estimate ties the upper bound within this
# slack, so float rounding can never discard an optimal-path cell.
PRUNE_SLACK = 1e-9


@njit(cache=True, inline="always")
def _step_cost(v, prev, target, c):
    if (prev <= v <= target) or (prev >= v >= target):
        return c
    d1 = abs(v - prev)
    d2 = abs(v - target)
    return c + (d1 if d1 < d2 else d2)


@njit(cache=True)
def _msm_table(x, y, c):
    """Full (m+1) x (n+1) cost table of the move/split/merge recursion."""
    m = x.shape[0]
    n = y.shape[0]
    d = np.empty((m + 1, n + 1))
    d[0, 0] = 0.0
    for j in range(1, n + 1):
        d[0, j] = SENTINEL
    for i in range(1, m + 1):
        d[i, 0] = SENTINEL
    for i in range(1, m + 1):
        xi = x[i - 1]
        xp = x[i - 2] if i > 1 else x[0]
        for j in range(1, n + 1):
            yj = y[j - 1]
            yp = y[j - 2] if j > 1 else y[0]
            move = d[i - 1, j - 1] + abs(xi - yj)
            mer = d[i - 1, j] + _step_cost(xi, xp, yj, c)
            spl = d[i, j - 1] + _step_cost(yj, xi, yp, c)
            best = move
            if mer < best:
                best = mer
            if spl < best:
                best = spl
            d[i, j] = best
    return d


@njit(cache=True)
def _msm_rowbuf(x, y, c):
    """Same recursion on a single row buffer of length n+1 (rows over x)."""
    m = x.shape[0]
    n = y.shape[0]
    buf = np.empty(n + 1)
    buf[0] = 0.0
    for j in range(1, n + 1):
        buf[j] = SENTINEL
    for i in range(1, m + 1):
        xi = x[i - 1]
        xp = x[i - 2] if i > 1 else x[0]
        above_left = buf[0]
        buf[0] = SENTINEL
        for j in range(1, n + 1):
            above = buf[j]
            yj = y[j - 1]
            yp = y[j - 2] if j > 1 else y[0]
            move = above_left + abs(xi - yj)
            mer = above + _step_cost(xi, xp, yj, c)
            spl = buf[j - 1] + _step_cost(yj, xi, yp, c)
            best = move
            if mer < best:
                best = mer
            if spl < best:
                best = spl
            buf[j] = best
            above_left = above
    return buf[n]


@njit(cache=True)
def _constant_suffix(x, q, c):
    """Reverse-order suffix costs against the constant series of value q.

    out[k] is the cost of transforming x[k:] into a constant series of the
    same length; out[m] = 0 is the sentinel.  Consecutive points on the
    same side of q whose deviations both reach 2c merge, everything else
    moves; points straddling q never merge (an optimal transformation
    keeps them in separate alignment trees).
    """
    m = x.shape[0]
    out = np.empty(m + 1)
    out[m] = 0.0
    out[m - 1] = abs(x[m - 1] - q)
    t = 2.0 * c
    for k in range(m - 2, -1, -1):
        da = x[k] - q
        db = x[k + 1] - q
        if (da >= t and db >= t) or (-da >= t and -db >= t):
            extra = abs(da) - abs(db)
            if extra < 0.0:
                extra = 0.0
            out[k] = out[k + 1] + t + extra
        else:
            out[k] = out[k + 1] + abs(da)
    return out


@njit(cache=True)
def _greedy_suffix(x, y, c):
    """Greedy one-path suffix costs; requires len(x) >= len(y).

    g[k] bounds the cost of aligning x[k:] to the y tail it faces on the
    shifted diagonal ending at the corner; positions left of the diagonal
    all face y[0].  g[m] = 0 is the sentinel.
    """
    m = x.shape[0]
    n = y.shape[0]
    g = np.empty(m + 1)
    g[m] = 0.0
    g[m - 1] = abs(x[m - 1] - y[n - 1])
    t = 2.0 * c
    for k in range(m - 2, m - n - 1, -1):
        jk = k - (m - n)
        a = abs(x[k] - y[jk])
        b = abs(x[k + 1] - y[jk + 1])
        if a >= t and b >= t:
            g[k] = g[k + 1] + t + abs(x[k] - x[k + 1]) + abs(y[jk] - y[jk + 1])
        else:
            g[k] = g[k + 1] + a
    y0 = y[0]
    for k in range(m - n - 1, -1, -1):
        a = abs(x[k] - y0)
        b = abs(x[k + 1] - y0)
        if a >= c and b >= c:
            g[k] = g[k + 1] + c + abs(x[k] - x[k + 1])
        else:
            g[k] = g[k + 1] + c + a
    return g


@njit(cache=True)
def _windowed_msm(x, y, c, lo, hi, cap_cols):
    """Recursion restricted to per-row column windows [lo[i], hi[i]].

    Windows are 0-based inclusive column bounds, already clamped,
    feasibility-checked, and non-decreasing row over row.  Two row buffers
    with sentinel-filled edges keep the inner loop free of range checks.
    After finishing row i the value at column cap_cols[i] is recorded
    (cap_cols[i] = -1 skips).  Returns (final value, captured).
    """
    m = x.shape[0]
    n = y.shape[0]
    prev = np.full(n + 1, SENTINEL)
    cur = np.full(n + 1, SENTINEL)
    prev[0] = 0.0
    captured = np.empty(m)
    for i0 in range(m):
        xi = x[i0]
        xp = x[i0 - 1] if i0 > 0 else x[0]
        l = lo[i0] + 1
        h = hi[i0] + 1
        cur[l - 1] = SENTINEL
        left = SENTINEL
        for j in range(l, h + 1):
            yj = y[j - 1]
            yp = y[j - 2] if j > 1 else y[0]
            move = prev[j - 1] + abs(xi - yj)
            mer = prev[j] + _step_cost(xi, xp, yj, c)
            spl = left + _step_cost(yj, xi, yp, c)
            best = move
            if mer < best:
                best = mer
            if spl < best:
                best = spl
            cur[j] = best
            left = best
        if cap_cols[i0] >= 0:
            cj = cap_cols[i0] + 1
            captured[i0] = cur[cj] if l <= cj <= h else SENTINEL
        cur[h + 1 :] = SENTINEL
        prev, cur = cur, prev
    return prev[n], captured


@njit(cache=True, inline="always")
def _lb_t_cell(i, j, m, n, c, q, x, y, dcx, dcy):
    """Reverse-triangle remaining-cost bound for 1-based cell (i, j).

    dcx/dcy are constant-series suffix tables (0-based, sentinel last), so
    the suffix cost starting behind position i is dcx[i].  The boundary
    correction discounts move cost the transition into the suffix may save.
    """
    diff = dcx[i] - dcy[j] - ((m - i) - (n - j)) * c
    if diff < 0.0:
        diff = -diff
    if i == m and j == n:
        s = 0.0
    else:
        a = abs(x[i - 1] - q) + abs(y[j - 1] - q)
        if 1 < i < m and 1 < j < n:
            s = a - c
            if s < 0.0:
                s = 0.0
        else:
            s = a
    v = diff - s
    return v if v > 0.0 else 0.0


@njit(cache=True)
def _pruned_msm(x, y, c, ub0, use_band, lb_mode, q, dcx, dcy, path_cols, path_suffix):
    """Exact distance with per-row start/end pruning against an upper bound.

    A cell is "over" when its value plus the lower bound exceeds the upper
    bound; the next row starts past the leading run of over cells and stops
    at the first over cell at or beyond the previous row's cutoff.  With
    ``use_band`` the columns are further restricted to |i-j| <= ceil(ub/c).
    ``path_cols[i0]`` >= 0 requests an upper-bound update at that 0-based
    column using the heuristic suffix costs in ``path_suffix``.

    lb_mode: 0 none, 1 length-mismatch, 2 reverse-triangle, 3 max of both.
    Returns (value, cells_computed, final upper bound).
    """
    m = x.shape[0]
    n = y.shape[0]
    prev = np.full(n + 1, SENTINEL)
    cur = np.full(n + 1, SENTINEL)
    prev[0] = 0.0
    ub = ub0
    cells = 0
    sc = 1
    ec = n + 1
    for i0 in range(m):
        i = i0 + 1
        xi = x[i0]
        xp = x[i0 - 1] if i0 > 0 else x[0]
        l = sc
        h = n
        if use_band and c > 0.0 and ub < SENTINEL:
            bw = int(math.ceil(ub / c + 1e-9))
            if i - bw > l:
                l = i - bw
            if i + bw < h:
                h = i + bw
        found = False
        next_sc = l
        next_ec = l
        last_j = l - 1
        cur[l - 1] = SENTINEL
        left = SENTINEL
        upd_col = path_cols[i0] + 1
        ms_base = (m - i) - n
        for j in range(l, h + 1):
            yj = y[j - 1]
            yp = y[j - 2] if j > 1 else y[0]
            move = prev[j - 1] + abs(xi - yj)
            mer = prev[j] + _step_cost(xi, xp, yj, c)
            spl = left + _step_cost(yj, xi, yp, c)
            v = move
            if mer < v:
                v = mer
            if spl < v:
                v = spl
            cur[j] = v
            cells += 1
            last_j = j
            if j == upd_col and v < SENTINEL:
                cand = v + path_suffix[i0 + 1]
                if cand < ub:
                    ub = cand
            lb = 0.0
            if lb_mode == 1 or lb_mode == 3:
                r = ms_base + j
                if r < 0:
                    r = -r
                lb = r * c
            if lb_mode == 2 or (lb_mode == 3 and v + lb <= ub + PRUNE_SLACK):
                lbt = _lb_t_cell(i, j, m, n, c, q, x, y, dcx, dcy)
                if lbt > lb:
                    lb = lbt
            if v + lb <= ub + PRUNE_SLACK:
                if not found:
                    next_sc = j
                    found = True
                next_ec = j + 1
            elif j >= ec:
                break
            left = v
        cur[last_j + 1 :] = SENTINEL
        prev, cur = cur, prev
        sc = next_sc
        ec = next_ec
    # skipped tails were sentinel-filled, so this is SENTINEL when unreached
    return prev[n], cells, ub


@njit(cache=True)
def _dtw_rowbuf(x, y, squared):
    """Classic DTW on a single row buffer; rows over x."""
    m = x.shape[0]
    n = y.shape[0]
    buf = np.empty(n + 1)
    buf[0] = 0.0
    for j in range(1, n + 1):
        buf[j] = SENTINEL
    for i0 in range(m):
        xi = x[i0]
        above_left = buf[0]
        buf[0] = SENTINEL
        for j in range(1, n + 1):
            above = buf[j]
            d = xi - y[j - 1]
            cost = d * d if squared else abs(d)
            best = above_left
            if above < best:
                best = above
            if buf[j - 1] < best:
                best = buf[j - 1]
            buf[j] = cost + best
            above_left = above
    return buf[n]


@njit(cache=True)
def _dtw_path_ub(x, y, squared):
    """Cost of the rounded slanted-diagonal warping path (a valid DTW path)."""
    m = x.shape[0]
    n = y.shape[0]
    d = x[0] - y[0]
    total = d * d if squared else abs(d)
    jt = int(math.floor(1.0 * n / m + 0.5))
    if jt < 1:
        jt = 1
    if jt > n:
        jt = n
    for l in range(2, jt + 1):
        d = x[0] - y[l - 1]
        total += d * d if squared else abs(d)
    jprev = jt
    for i in range(2, m + 1):
        jt = int(math.floor(i * n / m + 0.5))
        if jt < jprev:
            jt = jprev
        if jt > n:
            jt = n
        if jt == jprev:
            d = x[i - 1] - y[jt - 1]
            total += d * d if squared else abs(d)
        else:
            for l in range(jprev + 1, jt + 1):
                d = x[i - 1] - y[l - 1]
                total += d * d if squared else abs(d)
        jprev = jt
    return total


@njit(cache=True)
def _pruned_dtw(x, y, squared, ub0):
    """DTW with the same start/end row pruning; prefix cost alone prunes."""
    m = x.shape[0]
    n = y.shape[0]
    prev = np.full(n + 1, SENTINEL)
    cur = np.full(n + 1, SENTINEL)
    prev[0] = 0.0
    ub = ub0
    cells = 0
    sc = 1
    ec = n + 1
    for i0 in range(m):
        xi = x[i0]
        l = sc
        found = False
        next_sc = l
        next_ec = l
        last_j = l - 1
        cur[l - 1] = SENTINEL
        left = SENTINEL
        for j in range(l, n + 1):
            d = xi - y[j - 1]
            cost = d * d if squared else abs(d)
            best = prev[j - 1]
            if prev[j] < best:
                best = prev[j]
            if left < best:
                best = left
            v = cost + best
            cur[j] = v
            cells += 1
            last_j = j
            if v <= ub + PRUNE_SLACK:
                if not found:
                    next_sc = j
                    found = True
                next_ec = j + 1
            elif j >= ec:
                break
            left = v
        cur[last_j + 1 :] = SENTINEL
        prev, cur = cur, prev
        sc = next_sc
        ec = next_ec
    return prev[n], cells, ub


@njit(cache=True)
def _lb_t_probe(i, j, m, n, c, q, x, y, dcx, dcy):
    """Test hook: expose the inlined bound at one cell."""
    return _lb_t_cell(i, j, m, n, c, q, x, y, dcx, dcy)
