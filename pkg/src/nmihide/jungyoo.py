"""Jung-Yoo interpolation embedding, used as the comparison baseline.

The cover is tiled into 2x2 blocks anchored at even coordinates. Each
interpolated cell of a block carries ``floor(log2 |C(p,q) - C(anchor)|)``
bits added directly onto its cover value. Cells whose block extends past the
odd-sized cover still belong to that block.

``C(p,q) + 2**n - 1`` may not exceed 255, so the bit count is capped where it
would overflow. The cap depends only on cover values, which the extractor
rebuilds from the anchors, so capacity, embedding and extraction agree.
"""

from __future__ import annotations

from functools import lru_cache

from .bits import BitString
from .image import GrayImage
from .interpolation import (
    NBITS,
    nmi_upscale,
    subsample_anchors,
)
from .stream import (
    HEADER_BITS,
    CapacityMap,
    EmbedResult,
    frame,
    read_stream,
    write_stream,
)

# largest n with value + 2**n - 1 <= 255
_OVERFLOW_CAP = [(256 - v).bit_length() - 1 for v in range(256)]


def jy_traversal_order(width: int, height: int) -> list[tuple[int, int]]:
    """Block-major order: blocks raster-scanned, cells right, below, diagonal."""
    if width < 3 or height < 3 or not (width & 1 and height & 1):
        raise ValueError(f"{width}x{height} is not a (2M-1)x(2N-1) cover shape")
    order = []
    for i in range(0, height, 2):
        for j in range(0, width, 2):
            for p, q in ((i, j + 1), (i + 1, j), (i + 1, j + 1)):
                if p < height and q < width:
                    order.append((p, q))
    return order


@lru_cache(maxsize=64)
def _block_layout(W: int, H: int) -> tuple[tuple[int, int], ...]:
    """``(cell, anchor)`` flat indices in block-major order."""
    return tuple(
        (p * W + q, (p & ~1) * W + (q & ~1)) for p, q in jy_traversal_order(W, H))


def _capacity_map(cover: GrayImage) -> CapacityMap:
    s = cover.samples
    sites = []
    for pos, anchor_pos in _block_layout(cover.width, cover.height):
        c, a = s[pos], s[anchor_pos]
        if c >= a:
            n = min(NBITS[c - a], _OVERFLOW_CAP[c])
            sites.append((pos, n, c, a, c))
        else:
            # c + 2**n - 1 < a here, so no overflow cap
            sites.append((pos, NBITS[a - c], c, c, a))
    return CapacityMap(cover.width, cover.height, sites)


def jy_capacity(original: GrayImage) -> CapacityMap:
    """Entries record the anchor/cell pair as ``(min_val, max_val)``."""
    return _capacity_map(nmi_upscale(original))


def jy_embed(original: GrayImage, payload: BitString, raw: bool = False) -> EmbedResult:
    cover = nmi_upscale(original)
    capacity = _capacity_map(cover)
    stego = write_stream(cover, capacity, frame(payload, raw))
    return EmbedResult(
        stego=stego,
        payload_bits_embedded=len(payload),
        header_bits=0 if raw else HEADER_BITS,
        capacity=capacity,
    )


def jy_extract(stego: GrayImage, raw: bool = False) -> BitString:
    """Rebuild the cover from the stego anchors, then read each cell's offset."""
    cover = nmi_upscale(subsample_anchors(stego))
    return read_stream(stego, _capacity_map(cover), raw)


jy_recover_original = subsample_anchors
