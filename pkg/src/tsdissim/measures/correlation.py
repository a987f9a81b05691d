"""Correlation-shaped measures: Pearson distance, lagged cross-correlation,
autocorrelation and partial-autocorrelation vectors, and the temporal
correlation of first differences."""

from __future__ import annotations

import numpy as np

from ..errors import ConstantSeriesError, DegeneracyError, InputError, SeriesTooShortError

DEFAULT_ACF_LAG_CAP = 25


def _unit_deviations(v: np.ndarray) -> np.ndarray:
    """Mean-centered values scaled to unit Euclidean norm."""
    if np.ptp(v) == 0:
        raise ConstantSeriesError("constant series; correlation undefined")
    dev = v - np.mean(v)
    norm = float(np.sqrt(np.sum(dev * dev)))
    if norm == 0.0:
        raise ConstantSeriesError("zero-variance series; correlation undefined")
    return dev / norm


def d_cor(x: np.ndarray, y: np.ndarray) -> float:
    """sqrt(2 * (1 - Pearson correlation)).

    Computed as the Euclidean distance between unit deviation vectors, which
    is algebraically the same thing and returns exactly zero for identical
    inputs.
    """
    ux = _unit_deviations(x)
    uy = _unit_deviations(y)
    return float(np.sqrt(np.sum((ux - uy) ** 2)))


def symmetric_cross_correlations(x: np.ndarray, y: np.ndarray, max_lag: int) -> np.ndarray:
    """Cross-correlations at lags 1..max_lag, averaged over the two lag
    directions so the result is symmetric in (x, y); population-normalized."""
    n = x.size
    dx = x - np.mean(x)
    dy = y - np.mean(y)
    sx = float(np.sqrt(np.mean(dx * dx)))
    sy = float(np.sqrt(np.mean(dy * dy)))
    if sx == 0.0 or sy == 0.0:
        raise ConstantSeriesError("constant series; cross-correlation undefined")
    full = np.correlate(dx, dy, mode="full")
    mid = n - 1
    pos = full[mid + 1 : mid + 1 + max_lag]
    neg = full[mid - 1 : mid - 1 - max_lag : -1]
    return (pos + neg) / (2.0 * n * sx * sy)


def d_ccor(x: np.ndarray, y: np.ndarray, max_lag: int | None = None) -> float:
    """sqrt((1 - cc_0) / sum_{k=1..K} (1 - cc_k)) with K = length - 1 by default.

    cc_0 is the Pearson correlation; cc_k averages the two lag directions.
    """
    n = x.size
    lag = n - 1 if max_lag is None else int(max_lag)
    if not 1 <= lag <= n - 1:
        raise InputError(f"max_lag must be in 1..{n - 1}, got {lag}")
    ux = _unit_deviations(x)
    uy = _unit_deviations(y)
    # 1 - cc_0, written so identical inputs give exactly zero
    num = 0.5 * float(np.sum((ux - uy) ** 2))
    cc = symmetric_cross_correlations(x, y, lag)
    den = float(np.sum(1.0 - cc))
    if den <= 0.0:
        raise DegeneracyError("cross-correlation denominator vanished")
    return float(np.sqrt(max(0.0, num) / den))


def _resolve_lag(n: int, max_lag: int | None) -> int:
    lag = min(DEFAULT_ACF_LAG_CAP, n - 2) if max_lag is None else int(max_lag)
    if lag < 1 or n < lag + 2:
        raise SeriesTooShortError(
            f"need length >= max_lag + 2 (length {n}, max_lag {lag})"
        )
    return lag


def autocorrelations(v: np.ndarray, max_lag: int) -> np.ndarray:
    """Biased autocorrelation estimates at lags 1..max_lag."""
    dev = v - np.mean(v)
    denom = float(np.sum(dev * dev))
    if denom == 0.0:
        raise ConstantSeriesError("constant series; autocorrelation undefined")
    full = np.correlate(dev, dev, mode="full")
    mid = v.size - 1
    return full[mid + 1 : mid + 1 + max_lag] / denom


def pacf_durbin_levinson(acf: np.ndarray) -> np.ndarray:
    """Partial autocorrelations from autocorrelations via Durbin-Levinson.

    ``acf`` holds lags 1..L; the result holds the last-coefficient sequence
    phi_{m,m} for m = 1..L.
    """
    lags = acf.size
    r = np.concatenate([[1.0], acf])
    pacf = np.empty(lags)
    phi_prev = np.empty(0)
    for m in range(1, lags + 1):
        if m == 1:
            phi = np.array([r[1]])
        else:
            num = r[m] - float(np.dot(phi_prev, r[m - 1 : 0 : -1]))
            den = 1.0 - float(np.dot(phi_prev, r[1:m]))
            if den == 0.0:
                raise DegeneracyError("partial autocorrelation recursion degenerate")
            k = num / den
            phi = np.concatenate([phi_prev - k * phi_prev[::-1], [k]])
        pacf[m - 1] = phi[-1]
        phi_prev = phi
    return pacf


def d_acf(x: np.ndarray, y: np.ndarray, max_lag: int | None = None) -> float:
    """Euclidean distance between autocorrelation vectors at lags 1..L
    (L = min(25, length - 2) by default)."""
    lag = _resolve_lag(x.size, max_lag)
    return float(
        np.sqrt(np.sum((autocorrelations(x, lag) - autocorrelations(y, lag)) ** 2))
    )


def d_pacf(x: np.ndarray, y: np.ndarray, max_lag: int | None = None) -> float:
    """Euclidean distance between partial autocorrelation vectors at lags 1..L."""
    lag = _resolve_lag(x.size, max_lag)
    px = pacf_durbin_levinson(autocorrelations(x, lag))
    py = pacf_durbin_levinson(autocorrelations(y, lag))
    return float(np.sqrt(np.sum((px - py) ** 2)))


def d_cort(x: np.ndarray, y: np.ndarray, k: float = 2.0) -> float:
    """Euclidean distance modulated by the correlation of first differences.

    The factor 2 / (1 + exp(k * cort)) shrinks the distance when both series
    move together step by step and inflates it when they move oppositely.
    """
    dx = np.diff(x)
    dy = np.diff(y)
    nx = float(np.sqrt(np.sum(dx * dx)))
    ny = float(np.sqrt(np.sum(dy * dy)))
    if nx == 0.0 or ny == 0.0:
        raise ConstantSeriesError(
            "all first differences zero; temporal correlation undefined"
        )
    cort = float(np.dot(dx, dy)) / (nx * ny)
    l2 = float(np.sqrt(np.sum((x - y) ** 2)))
    return 2.0 / (1.0 + float(np.exp(k * cort))) * l2
