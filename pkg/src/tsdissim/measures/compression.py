"""Compression-based dissimilarities over serialized series.

Series are rendered to bytes either as comma-separated fixed-precision
decimals (the default) or as a SAX symbol string (z-normalize, then bin each
point against Gaussian breakpoints), then sized with zlib at a fixed level.
zlib framing is constant, so sizes carry no metadata that could vary between
runs. Concatenation order matters slightly, so these measures are not exactly
symmetric; distance matrices symmetrize them by averaging the two orders.
"""

from __future__ import annotations

import statistics
import zlib

import numpy as np

from ..errors import CompressionError, InputError

SYMBOLIZATIONS = ("text", "sax")


def render_text(values, digits: int = 6) -> bytes:
    """Comma-separated decimal rendering with ``digits`` significant digits."""
    if digits < 1:
        raise InputError(f"digits must be >= 1, got {digits}")
    fmt = f"%.{digits}g"
    return ",".join(fmt % v for v in values).encode("ascii")


def _sax_breakpoints(alphabet: int) -> list[float]:
    gauss = statistics.NormalDist()
    return [gauss.inv_cdf(i / alphabet) for i in range(1, alphabet)]


def render_sax(values, alphabet: int = 10) -> bytes:
    """One letter per point: z-normalized values binned at Gaussian breakpoints."""
    if not 2 <= alphabet <= 26:
        raise InputError(f"sax alphabet size must be in 2..26, got {alphabet}")
    v = np.asarray(values, dtype=float)
    sd = float(np.std(v))
    z = (v - np.mean(v)) / sd if sd > 0 else np.zeros_like(v)
    codes = np.searchsorted(_sax_breakpoints(alphabet), z, side="left")
    return bytes(97 + int(c) for c in codes)


def compressed_size(data: bytes, level: int = 9) -> int:
    """Byte size of the zlib-compressed payload."""
    try:
        return len(zlib.compress(data, level))
    except zlib.error as exc:  # pragma: no cover - zlib does not fail on bytes
        raise CompressionError(str(exc)) from exc


def _render_pair(x, y, symbolization, digits, alphabet):
    if symbolization == "text":
        bx = render_text(x, digits)
        by = render_text(y, digits)
        return bx, by, bx + b"," + by
    if symbolization == "sax":
        bx = render_sax(x, alphabet)
        by = render_sax(y, alphabet)
        return bx, by, bx + by
    raise InputError(f"unknown symbolization {symbolization!r}")


def d_cdm(
    x: np.ndarray,
    y: np.ndarray,
    symbolization: str = "text",
    digits: int = 6,
    alphabet: int = 10,
    level: int = 9,
) -> float:
    """C(xy) / (C(x) + C(y)); near 1/2 for equal series, near 1 for unrelated ones."""
    bx, by, bxy = _render_pair(x, y, symbolization, digits, alphabet)
    return compressed_size(bxy, level) / (
        compressed_size(bx, level) + compressed_size(by, level)
    )


def d_ncd(
    x: np.ndarray,
    y: np.ndarray,
    symbolization: str = "text",
    digits: int = 6,
    alphabet: int = 10,
    level: int = 9,
) -> float:
    """(C(xy) - min(C(x), C(y))) / max(C(x), C(y)), clamped at zero.

    Compressor quirks can push the raw value a hair below zero; the clamp
    keeps the measure non-negative.
    """
    bx, by, bxy = _render_pair(x, y, symbolization, digits, alphabet)
    cx = compressed_size(bx, level)
    cy = compressed_size(by, level)
    cxy = compressed_size(bxy, level)
    return max(0.0, (cxy - min(cx, cy)) / max(cx, cy))
