"""Shared pure-Python oracles, deliberately independent of the library's
numba kernels: straightforward table recursions with infinity borders."""

import math

import numpy as np
import pytest

TOL = 1e-9


def step_cost(v, prev, target, c):
    if prev <= v <= target or prev >= v >= target:
        return c
    return c + min(abs(v - prev), abs(v - target))


def naive_msm_table(x, y, c):
    """Full-table recursion, the reference for every exact algorithm."""
    m, n = len(x), len(y)
    d = [[math.inf] * (n + 1) for _ in range(m + 1)]
    d[0][0] = 0.0
    for i in range(1, m + 1):
        xi, xp = x[i - 1], x[i - 2] if i > 1 else x[0]
        for j in range(1, n + 1):
            yj, yp = y[j - 1], y[j - 2] if j > 1 else y[0]
            d[i][j] = min(
                d[i - 1][j - 1] + abs(xi - yj),
                d[i - 1][j] + step_cost(xi, xp, yj, c),
                d[i][j - 1] + step_cost(yj, xi, yp, c),
            )
    return d


def naive_msm(x, y, c):
    return naive_msm_table(x, y, c)[len(x)][len(y)]


def naive_windowed_msm(x, y, c, windows):
    """Restricted recursion; windows[i] = (lo, hi) 1-based inclusive."""
    m, n = len(x), len(y)
    d = [[math.inf] * (n + 1) for _ in range(m + 1)]
    d[0][0] = 0.0
    for i in range(1, m + 1):
        lo, hi = windows[i - 1]
        xi, xp = x[i - 1], x[i - 2] if i > 1 else x[0]
        for j in range(max(1, lo), min(n, hi) + 1):
            yj, yp = y[j - 1], y[j - 2] if j > 1 else y[0]
            d[i][j] = min(
                d[i - 1][j - 1] + abs(xi - yj),
                d[i - 1][j] + step_cost(xi, xp, yj, c),
                d[i][j - 1] + step_cost(yj, xi, yp, c),
            )
    return d[m][n]


def naive_completion_costs(x, y, c):
    """comp[i][j]: cheapest way to extend an alignment from cell (i, j) to
    the final cell, following the recursion's step costs backwards."""
    m, n = len(x), len(y)
    comp = [[math.inf] * (n + 1) for _ in range(m + 1)]
    comp[m][n] = 0.0
    for i in range(m, 0, -1):
        for j in range(n, 0, -1):
            if i == m and j == n:
                continue
            best = math.inf
            if i < m and j < n:
                best = comp[i + 1][j + 1] + abs(x[i] - y[j])
            if i < m:
                best = min(best, comp[i + 1][j] + step_cost(x[i], x[i - 1], y[j - 1], c))
            if j < n:
                best = min(best, comp[i][j + 1] + step_cost(y[j], x[i - 1], y[j - 1], c))
            comp[i][j] = best
    return comp


def backtrack_path(table, x, y, c):
    """One optimal path through a full table, as 1-based (i, j) cells."""
    i, j = len(x), len(y)
    path = [(i, j)]
    while (i, j) != (1, 1):
        xi, xp = x[i - 1], x[i - 2] if i > 1 else x[0]
        yj, yp = y[j - 1], y[j - 2] if j > 1 else y[0]
        here = table[i][j]
        if i > 1 and j > 1 and abs(table[i - 1][j - 1] + abs(xi - yj) - here) <= 1e-12:
            i, j = i - 1, j - 1
        elif i > 1 and abs(table[i - 1][j] + step_cost(xi, xp, yj, c) - here) <= 1e-12:
            i = i - 1
        elif j > 1 and abs(table[i][j - 1] + step_cost(yj, xi, yp, c) - here) <= 1e-12:
            j = j - 1
        elif i > 1 and j > 1:
            i, j = i - 1, j - 1  # float slack: fall back to the move branch
        elif i > 1:
            i = i - 1
        else:
            j = j - 1
        path.append((i, j))
    return path[::-1]


def naive_dtw(x, y, squared):
    m, n = len(x), len(y)
    d = [[math.inf] * (n + 1) for _ in range(m + 1)]
    d[0][0] = 0.0
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            dd = x[i - 1] - y[j - 1]
            cost = dd * dd if squared else abs(dd)
            d[i][j] = cost + min(d[i - 1][j - 1], d[i - 1][j], d[i][j - 1])
    return d[m][n]


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)
