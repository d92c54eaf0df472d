"""Range-based interpolation embedding.

Each interpolated pixel carries ``floor(log2(Max - Min))`` bits, where Max and
Min are taken over its anchor neighbors, and is written as ``Min + dec``.
Because anchors are untouched, the extractor recomputes the same Min/Max from
the stego image alone, and the original image is the stego's anchor grid.
"""

from __future__ import annotations

from .bits import BitString
from .image import GrayImage
from .interpolation import (
    NBITS,
    nmi_upscale,
    site_extrema,
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


def traversal_order(width: int, height: int) -> list[tuple[int, int]]:
    """Interpolated pixel coordinates of a ``width x height`` cover, row-major."""
    if width < 3 or height < 3 or not (width & 1 and height & 1):
        raise ValueError(f"{width}x{height} is not a (2M-1)x(2N-1) cover shape")
    return [(i, j) for i in range(height) for j in range(width) if (i | j) & 1]


def _capacity_map(img: GrayImage) -> CapacityMap:
    sites = [(pos, NBITS[hi - lo], lo, lo, hi) for pos, lo, hi in site_extrema(img)]
    return CapacityMap(img.width, img.height, sites)


def compute_capacity(original: GrayImage) -> CapacityMap:
    return _capacity_map(nmi_upscale(original))


def embed(original: GrayImage, payload: BitString, raw: bool = False) -> EmbedResult:
    """Embed ``payload`` while upscaling ``original``.

    Raises :class:`~nmihide.errors.CapacityError` when header plus payload
    exceed the image capacity. With ``raw=True`` no length header is written.
    """
    cover = nmi_upscale(original)
    capacity = _capacity_map(cover)
    stego = write_stream(cover, capacity, frame(payload, raw))
    return EmbedResult(
        stego=stego,
        payload_bits_embedded=len(payload),
        header_bits=0 if raw else HEADER_BITS,
        capacity=capacity,
    )


def extract(stego: GrayImage, raw: bool = False) -> BitString:
    """Recover the payload.

    In raw mode every site is read at full width, so the result is the whole
    capacity-length stream.
    """
    return read_stream(stego, _capacity_map(stego), raw)


def recover_original(stego: GrayImage) -> GrayImage:
    return subsample_anchors(stego)
