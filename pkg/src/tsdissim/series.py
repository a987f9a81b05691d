"""Time-series container and the windowing operations of the benchmark protocol.

A series is compared against three derived subseries: its prefix (the *base*
window), a forward-shifted copy of that window (*delayed*), and a
time-compressed copy obtained by averaging roughly ``alpha`` consecutive
points (*warped*). Perturbations (scaling, shifting, additive noise) model
measurement distortions applied to the delayed window before distances are
taken.

All operations are pure: noise is drawn from a stream derived from the
perturbation seed and the series label, so equal inputs give equal outputs.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    ConstantSeriesError,
    DegenerateSeriesError,
    DelayOutOfRangeError,
    IndexOutOfRangeError,
    InputError,
    ZeroDenominatorError,
)

QUARTERLY = "quarterly"
MONTHLY = "monthly"
ABSTRACT = "abstract"
FREQUENCIES = (QUARTERLY, MONTHLY, ABSTRACT)

# data points per quarter of delay; abstract series are treated as quarterly
POINTS_PER_QUARTER = {QUARTERLY: 1, MONTHLY: 3, ABSTRACT: 1}

# guards floor(n / alpha) against quotients like 11/2.2 landing just below an integer
_FLOOR_EPS = 1e-9


@dataclass(frozen=True, eq=False)
class TimeSeries:
    """Immutable finite real-valued series with a sampling frequency and label."""

    values: np.ndarray
    frequency: str = ABSTRACT
    label: str = "series"

    def __post_init__(self) -> None:
        vals = np.array(self.values, dtype=float)
        if vals.ndim != 1:
            raise InputError(f"series {self.label!r} must be one-dimensional")
        if vals.size < 2:
            raise DegenerateSeriesError(
                f"series {self.label!r} needs at least 2 points, got {vals.size}"
            )
        if not np.all(np.isfinite(vals)):
            raise InputError(f"series {self.label!r} contains non-finite values")
        if self.frequency not in FREQUENCIES:
            raise InputError(f"unknown frequency {self.frequency!r}")
        if not self.label:
            raise InputError("series label must be non-empty")
        vals.flags.writeable = False
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return int(self.values.size)

    def with_values(self, values, label: str | None = None) -> "TimeSeries":
        """New series with the same frequency (and label, unless overridden)."""
        return TimeSeries(values, self.frequency, self.label if label is None else label)


@dataclass(frozen=True)
class WarpDelayParams:
    """Warp factor and delay (in quarters) selecting one benchmark cell."""

    alpha: float
    delta_quarters: int = 0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.alpha) and self.alpha >= 1.0):
            raise InputError(f"warp factor must be >= 1, got {self.alpha}")
        if self.delta_quarters < 0:
            raise InputError(f"delay must be >= 0 quarters, got {self.delta_quarters}")

    def point_delay(self, frequency: str) -> int:
        """Delay in data points: one per quarter for quarterly data, three for monthly."""
        if frequency not in FREQUENCIES:
            raise InputError(f"unknown frequency {frequency!r}")
        return self.delta_quarters * POINTS_PER_QUARTER[frequency]


PERTURBATION_KINDS = ("none", "scale", "shift", "noise", "all")
NOISE_MODES = ("sigma", "absolute")


@dataclass(frozen=True)
class Perturbation:
    """Distortion applied to a delayed window before measuring distances.

    ``shift`` adds ``shift_sigmas`` reference standard deviations to every
    value; ``noise`` adds i.i.d. Gaussian noise with standard deviation
    ``noise_sigmas`` times the reference sigma, or ``noise_sigmas`` itself in
    ``absolute`` mode (used for percentage-change corpora). ``all`` applies
    scale, then shift, then noise. The noise stream is derived from
    ``(seed, series label)``.
    """

    kind: str = "none"
    scale_factor: float = 2.0
    shift_sigmas: float = 1.0
    noise_sigmas: float = 0.1
    noise_mode: str = "sigma"
    seed: int = 0

    def __post_init__(self) -> None:
        if self.kind not in PERTURBATION_KINDS:
            raise InputError(f"unknown perturbation kind {self.kind!r}")
        if self.scale_factor == 0:
            raise InputError("scale factor must be nonzero")
        if self.noise_mode not in NOISE_MODES:
            raise InputError(f"unknown noise mode {self.noise_mode!r}")
        if self.seed < 0:
            raise InputError("seed must be non-negative")


def _noise_rng(seed: int, label: str) -> np.random.Generator:
    # independent stream per (seed, label), stable across processes
    digest = hashlib.sha256(label.encode("utf-8")).digest()
    stream = int.from_bytes(digest[:8], "big")
    return np.random.default_rng(np.random.SeedSequence([seed, stream]))


def perturb(x: TimeSeries, p: Perturbation, sigma: float | None = None) -> TimeSeries:
    """Apply ``p`` to ``x``; ``sigma`` is the reference standard deviation.

    Pass the population sigma of the full original series when perturbing a
    window cut from it; it defaults to the sigma of ``x`` itself.
    """
    if p.kind == "none":
        return x.with_values(x.values)
    if sigma is None:
        sigma = float(np.std(x.values))
    out = x.values.astype(float)
    if p.kind in ("scale", "all"):
        out = out * p.scale_factor
    if p.kind in ("shift", "all"):
        if sigma == 0.0:
            raise ConstantSeriesError(f"cannot shift {x.label!r}: zero variance")
        out = out + p.shift_sigmas * sigma
    if p.kind in ("noise", "all"):
        if p.noise_mode == "sigma":
            if sigma == 0.0:
                raise ConstantSeriesError(
                    f"cannot add sigma-scaled noise to {x.label!r}: zero variance"
                )
            std = p.noise_sigmas * sigma
        else:
            std = p.noise_sigmas
        rng = _noise_rng(p.seed, x.label)
        out = out + rng.normal(0.0, std, size=out.size)
    return x.with_values(out)


def _check_alpha(alpha: float) -> None:
    if not (math.isfinite(alpha) and alpha >= 1.0):
        raise InputError(f"warp factor must be >= 1, got {alpha}")


def window_length(length: int, alpha: float) -> int:
    """floor(length / alpha), tolerant of float quotients just below an integer."""
    _check_alpha(alpha)
    return int(math.floor(length / alpha + _FLOOR_EPS))


def base_series(x: TimeSeries, alpha: float) -> TimeSeries:
    """Prefix of length floor(len(x) / alpha)."""
    m = window_length(len(x), alpha)
    if m < 2:
        raise DegenerateSeriesError(
            f"warp factor {alpha} leaves {m} point(s) of {x.label!r}"
        )
    return x.with_values(x.values[:m])


def delayed_series(x: TimeSeries, alpha: float, delta: int) -> TimeSeries:
    """Window of the base length starting ``delta`` points into the series."""
    if delta < 0 or int(delta) != delta:
        raise InputError(f"point delay must be a non-negative integer, got {delta}")
    delta = int(delta)
    m = window_length(len(x), alpha)
    if m < 2:
        raise DegenerateSeriesError(
            f"warp factor {alpha} leaves {m} point(s) of {x.label!r}"
        )
    if m + delta > len(x):
        raise DelayOutOfRangeError(
            f"delayed window [{delta}, {delta + m}) exceeds length {len(x)} of {x.label!r}"
        )
    return x.with_values(x.values[delta : delta + m])


def warp_weights(length: int, alpha: float) -> np.ndarray:
    """Averaging weights: entry (i, j) is the overlap |[j, j+1) ∩ [i*a, (i+1)*a)|.

    Indices are zero-based and ``a`` is the warp factor. The matrix has
    floor(length / alpha) rows; each row sums to alpha because the whole warp
    interval lies inside [0, length). For integer alpha the rows select
    disjoint blocks with unit weights.
    """
    m = window_length(length, alpha)
    bounds = np.arange(m + 1) * alpha
    cell_lo = np.arange(length, dtype=float)
    overlap = np.minimum(bounds[1:, None], cell_lo[None, :] + 1.0) - np.maximum(
        bounds[:-1, None], cell_lo[None, :]
    )
    return np.maximum(overlap, 0.0)


def warped_series(x: TimeSeries, alpha: float) -> TimeSeries:
    """Time-compress ``x`` by averaging about ``alpha`` consecutive points per output point."""
    weights = warp_weights(len(x), alpha)
    if weights.shape[0] < 2:
        raise DegenerateSeriesError(
            f"warp factor {alpha} leaves {weights.shape[0]} point(s) of {x.label!r}"
        )
    vals = x.values
    out = np.empty(weights.shape[0])
    for i, row in enumerate(weights):
        nz = np.flatnonzero(row)
        # fsum keeps integer-alpha block means bit-exact
        out[i] = math.fsum((row[nz] * vals[nz]).tolist()) / alpha
    return x.with_values(out)


def pct_change(x: TimeSeries) -> TimeSeries:
    """Step-to-step percentage changes 100 * (x[t+1] / x[t] - 1); one point shorter."""
    vals = x.values
    if np.any(vals[:-1] == 0.0):
        raise ZeroDenominatorError(
            f"series {x.label!r} contains zero values; percentage change undefined"
        )
    return x.with_values(100.0 * (vals[1:] / vals[:-1] - 1.0))


def negate(x: TimeSeries, label: str | None = None) -> TimeSeries:
    """Sign-reversed copy."""
    return x.with_values(-x.values, label=label)


def concat_prefix_suffix(
    x: TimeSeries, y: TimeSeries, cut: int, label: str | None = None
) -> TimeSeries:
    """First ``cut`` points of ``x`` glued to ``y[cut:]``."""
    if not 0 < cut < len(y) or cut > len(x):
        raise IndexOutOfRangeError(
            f"cut {cut} out of range for lengths {len(x)} and {len(y)}"
        )
    out = np.concatenate([x.values[:cut], y.values[cut:]])
    return TimeSeries(out, x.frequency, x.label if label is None else label)


def transform_series(
    x: TimeSeries,
    kind: str,
    *,
    other: TimeSeries | None = None,
    cut: int | None = None,
    label: str | None = None,
) -> TimeSeries:
    """Dispatch for the supported transforms: 'negate' and 'concat_prefix_suffix'."""
    if kind == "negate":
        return negate(x, label=label)
    if kind == "concat_prefix_suffix":
        if other is None or cut is None:
            raise InputError("concat_prefix_suffix needs 'other' and 'cut'")
        return concat_prefix_suffix(x, other, cut, label=label)
    raise InputError(f"unknown transform {kind!r}")
