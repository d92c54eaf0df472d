"""Image quality and capacity metrics."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .image import GrayImage

PEAK = 255


def _check_same_shape(a: GrayImage, b: GrayImage):
    if (a.width, a.height) != (b.width, b.height):
        raise ValueError(
            f"dimension mismatch: {a.width}x{a.height} vs {b.width}x{b.height}")


def mse(a: GrayImage, b: GrayImage) -> float:
    _check_same_shape(a, b)
    diff = a.array.astype(np.int64) - b.array.astype(np.int64)
    # integer sum keeps the numerator exact
    return int(np.sum(diff * diff)) / diff.size


def psnr(a: GrayImage, b: GrayImage) -> float:
    """Peak signal-to-noise ratio in dB; ``math.inf`` for identical images."""
    err = mse(a, b)
    if err == 0:
        return math.inf
    return 10 * math.log10(PEAK * PEAK / err)


def bpp(bits_embedded: int, stego: GrayImage) -> float:
    return bits_embedded / (stego.width * stego.height)


def gain_rate(bpp_proposed: float, bpp_baseline: float) -> float:
    """Relative payload improvement over the baseline, e.g. 1.0 for double."""
    if bpp_baseline <= 0:
        raise ZeroDivisionError("gain rate undefined for a zero baseline")
    return (bpp_proposed - bpp_baseline) / bpp_baseline


@dataclass(frozen=True)
class QualityReport:
    mse: float
    psnr_db: float
    bpp: float

    @classmethod
    def compare(cls, reference: GrayImage, stego: GrayImage, bits_embedded: int):
        err = mse(reference, stego)
        db = math.inf if err == 0 else 10 * math.log10(PEAK * PEAK / err)
        return cls(err, db, bpp(bits_embedded, stego))


def format_db(value: float) -> str:
    return "inf" if math.isinf(value) else f"{value:.2f}"
