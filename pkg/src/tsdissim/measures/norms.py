"""Pointwise norms and their slope- and complexity-weighted variants."""

from __future__ import annotations

import numpy as np

# below this, a first-difference curve counts as flat
_FLAT = 1e-12


def d_euclidean(x: np.ndarray, y: np.ndarray) -> float:
    return float(np.sqrt(np.sum((x - y) ** 2)))


def d_manhattan(x: np.ndarray, y: np.ndarray) -> float:
    return float(np.sum(np.abs(x - y)))


def d_infnorm(x: np.ndarray, y: np.ndarray) -> float:
    return float(np.max(np.abs(x - y)))


def d_sts(x: np.ndarray, y: np.ndarray) -> float:
    """Euclidean distance between the step-to-step slope sequences."""
    return float(np.sqrt(np.sum((np.diff(x) - np.diff(y)) ** 2)))


def d_cid(x: np.ndarray, y: np.ndarray) -> float:
    """Euclidean distance stretched by the ratio of complexity estimates.

    Complexity is the length of the first-difference curve,
    sqrt(sum(diff^2)). Two flat series get ratio 1 instead of 0/0.
    """
    ce_x = float(np.sqrt(np.sum(np.diff(x) ** 2)))
    ce_y = float(np.sqrt(np.sum(np.diff(y) ** 2)))
    if ce_x < _FLAT and ce_y < _FLAT:
        factor = 1.0
    else:
        factor = max(ce_x, ce_y) / max(min(ce_x, ce_y), _FLAT)
    return d_euclidean(x, y) * factor
