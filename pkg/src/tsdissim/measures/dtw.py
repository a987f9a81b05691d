"""Dynamic time warping with unit-weight steps and absolute-difference cost."""

from __future__ import annotations

import numpy as np


def dtw_distance(x, y) -> float:
    """Minimal accumulated |x_i - y_j| over monotone alignment paths.

    Unconstrained: no window, and diagonal, horizontal, and vertical steps
    all weigh 1. The kernel accepts unequal lengths; the measure dispatch
    enforces equal lengths like every other measure.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    n, m = x.size, y.size
    cost_rows = np.abs(x[:, None] - y[None, :]).tolist()
    inf = float("inf")
    prev = [inf] * (m + 1)
    prev[0] = 0.0
    for i in range(n):
        row = cost_rows[i]
        cur = [inf] * (m + 1)
        for j in range(1, m + 1):
            best = prev[j]
            diag = prev[j - 1]
            if diag < best:
                best = diag
            left = cur[j - 1]
            if left < best:
                best = left
            cur[j] = row[j - 1] + best
        prev = cur
    return prev[m]


def d_dtw(x: np.ndarray, y: np.ndarray) -> float:
    return dtw_distance(x, y)
