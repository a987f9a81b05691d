"""Ordinal-pattern distribution distance (squared Hellinger divergence)."""

from __future__ import annotations

import math
from collections import Counter

import numpy as np

from ..errors import InputError, SeriesTooShortError

DEFAULT_EMBEDDING_DIM = 4


def ordinal_pattern_distribution(v, dim: int = DEFAULT_EMBEDDING_DIM) -> dict:
    """Relative frequencies of rank patterns over all windows of ``dim`` points.

    Ties rank by position (stable argsort), which makes patterns invariant
    under increasing affine maps of the values.
    """
    if dim < 2:
        raise InputError(f"embedding dimension must be >= 2, got {dim}")
    v = np.asarray(v, dtype=float)
    if v.size < dim + 1:
        raise SeriesTooShortError(
            f"need at least dim + 1 = {dim + 1} points, got {v.size}"
        )
    n_windows = v.size - dim + 1
    counts = Counter(
        tuple(np.argsort(v[t : t + dim], kind="stable").tolist())
        for t in range(n_windows)
    )
    return {pattern: c / n_windows for pattern, c in counts.items()}


def d_pdc(x: np.ndarray, y: np.ndarray, dim: int = DEFAULT_EMBEDDING_DIM) -> float:
    """Sum over patterns of (sqrt(p) - sqrt(q))^2; ranges over [0, 2].

    Patterns are visited in sorted order so the result is exactly symmetric.
    """
    p = ordinal_pattern_distribution(x, dim)
    q = ordinal_pattern_distribution(y, dim)
    total = 0.0
    for pattern in sorted(set(p) | set(q)):
        total += (math.sqrt(p.get(pattern, 0.0)) - math.sqrt(q.get(pattern, 0.0))) ** 2
    return total
