"""Periodogram and DFT-coefficient distances.

The DC bin is excluded from the periodogram measures, so pure level shifts do
not register there; the raw-coefficient distance keeps it.
"""

from __future__ import annotations

import numpy as np

from ..errors import SeriesTooShortError, ZeroPowerError

_MIN_LENGTH = 4


def periodogram(v) -> np.ndarray:
    """I(k) = |DFT_k|^2 / T at the Fourier frequencies k = 1..floor(T/2)."""
    v = np.asarray(v, dtype=float)
    if v.size < _MIN_LENGTH:
        raise SeriesTooShortError(f"need at least {_MIN_LENGTH} points, got {v.size}")
    spec = np.abs(np.fft.rfft(v)) ** 2 / v.size
    return spec[1:]


def d_per(x: np.ndarray, y: np.ndarray) -> float:
    """Euclidean distance between periodogram vectors."""
    return float(np.sqrt(np.sum((periodogram(x) - periodogram(y)) ** 2)))


def _normalized_cumulative(v: np.ndarray) -> np.ndarray:
    if np.ptp(v) == 0:
        raise ZeroPowerError("constant series has zero spectral power")
    p = periodogram(v)
    total = float(np.sum(p))
    if total == 0.0:
        raise ZeroPowerError("zero spectral power; cannot normalize periodogram")
    return np.cumsum(p) / total


def d_int_per(x: np.ndarray, y: np.ndarray) -> float:
    """L1 distance between power-normalized cumulative periodograms."""
    return float(np.sum(np.abs(_normalized_cumulative(x) - _normalized_cumulative(y))))


def d_fourier(x: np.ndarray, y: np.ndarray) -> float:
    """Euclidean distance between DFT coefficients k = 0..floor(T/2)."""
    if x.size < _MIN_LENGTH:
        raise SeriesTooShortError(f"need at least {_MIN_LENGTH} points, got {x.size}")
    return float(np.sqrt(np.sum(np.abs(np.fft.rfft(x) - np.fft.rfft(y)) ** 2)))
