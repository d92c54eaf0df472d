"""Neighbor mean interpolation and anchor-neighbor extrema.

An ``M x N`` original becomes a ``(2M-1) x (2N-1)`` cover. Pixels at even
``(row, col)`` are anchors copied from the original; every other pixel is
interpolated from anchors (and, on the diagonal, from its already interpolated
upper and left neighbors).
"""

from __future__ import annotations

import enum
from functools import lru_cache
from itertools import chain
from dataclasses import dataclass

from .errors import DimensionError
from .image import GrayImage


class PixelClass(enum.Enum):
    ORIGINAL = "original"
    ROW_INTERP = "row"  # even row, odd column: left/right anchors
    COL_INTERP = "col"  # odd row, even column: up/down anchors
    DIAG_INTERP = "diag"  # odd row, odd column


_CLASSES = {
    (0, 0): PixelClass.ORIGINAL,
    (0, 1): PixelClass.ROW_INTERP,
    (1, 0): PixelClass.COL_INTERP,
    (1, 1): PixelClass.DIAG_INTERP,
}


def classify(i: int, j: int) -> PixelClass:
    return _CLASSES[i & 1, j & 1]


# floor(log2 d) for d >= 2, zero for d in {0, 1}
NBITS = [0, 0] + [d.bit_length() - 1 for d in range(2, 256)]


def capacity_bits(d: int) -> int:
    """Bits an interpolated pixel can carry for a neighbor range ``d``."""
    if d < 2:
        return 0
    return d.bit_length() - 1


@dataclass(frozen=True)
class Extrema:
    min_val: int
    max_val: int

    @property
    def d(self) -> int:
        return self.max_val - self.min_val

    @property
    def n_bits(self) -> int:
        return capacity_bits(self.d)


def check_original(original: GrayImage) -> None:
    if original.width < 2 or original.height < 2:
        raise DimensionError(
            f"original must be at least 2x2, got {original.width}x{original.height}")


def check_cover_shape(img: GrayImage) -> None:
    """Raise unless ``img`` has the odd (2M-1) x (2N-1) shape of an upscaled image."""
    if img.width < 3 or img.height < 3 or not (img.width & 1 and img.height & 1):
        raise DimensionError(
            f"{img.width}x{img.height} is not a (2M-1)x(2N-1) interpolated shape with M, N >= 2")


def nmi_upscale(original: GrayImage) -> GrayImage:
    check_original(original)
    n_cols = original.width
    W = 2 * n_cols - 1
    src = original.samples

    rows = []
    prev = None
    for m in range(original.height):
        anchors = src[m * n_cols:(m + 1) * n_cols]
        row = [0] * W
        row[0::2] = anchors
        row[1::2] = [(a + b) >> 1 for a, b in zip(anchors, anchors[1:])]
        if prev is not None:
            # odd row between the previous and the current anchor rows
            col = [(a + b) >> 1 for a, b in zip(prev[0::2], anchors)]
            diag = [(ul + u + left) // 3 for ul, u, left in zip(prev[0::2], prev[1::2], col)]
            mid = [0] * W
            mid[0::2] = col
            mid[1::2] = diag
            rows.append(mid)
        rows.append(row)
        prev = row

    return GrayImage(W, len(rows), bytes(chain.from_iterable(rows)))


def anchor_neighbors(i: int, j: int) -> tuple[tuple[int, int], ...]:
    """Cover coordinates of the anchors whose extrema bound pixel ``(i, j)``."""
    cls = classify(i, j)
    if cls is PixelClass.ROW_INTERP:
        return (i, j - 1), (i, j + 1)
    if cls is PixelClass.COL_INTERP:
        return (i - 1, j), (i + 1, j)
    if cls is PixelClass.DIAG_INTERP:
        return (i - 1, j - 1), (i - 1, j + 1), (i + 1, j - 1)
    raise ValueError(f"({i}, {j}) is an anchor pixel and has no interpolation neighbors")


def neighbor_extrema(img: GrayImage, i: int, j: int) -> Extrema:
    """Min/max over the anchor neighbors of interpolated pixel ``(i, j)``.

    Anchors are never modified by embedding, so this gives the same answer on
    a cover image and on any stego image derived from it.
    """
    coords = anchor_neighbors(i, j)
    for r, c in coords:
        assert 0 <= r < img.height and 0 <= c < img.width, (
            f"neighbor ({r}, {c}) of ({i}, {j}) outside {img.width}x{img.height}")
    values = [img[r, c] for r, c in coords]
    return Extrema(min(values), max(values))


@lru_cache(maxsize=64)
def _neighbor_layout(W: int, H: int) -> tuple[tuple[int, int, int, int], ...]:
    """``(pos, a, b, c)`` flat indices of each interpolated pixel and its anchors.

    Two-neighbor pixels repeat their first anchor as ``c``.
    """
    layout = []
    for i in range(H):
        base = i * W
        for j in range(W):
            if not (i | j) & 1:
                continue
            pos = base + j
            if i & 1 == 0:
                layout.append((pos, pos - 1, pos + 1, pos - 1))
            elif j & 1 == 0:
                layout.append((pos, pos - W, pos + W, pos - W))
            else:
                layout.append((pos, pos - W - 1, pos - W + 1, pos + W - 1))
    return tuple(layout)


def site_extrema(img: GrayImage) -> list[tuple[int, int, int]]:
    """``(flat_index, min, max)`` for every interpolated pixel in raster order.

    Fast path for the codecs; equivalent to calling :func:`neighbor_extrema`
    on each pixel returned by the proposed traversal.
    """
    check_cover_shape(img)
    s = img.samples
    out = []
    for pos, a, b, c in _neighbor_layout(img.width, img.height):
        x, y, z = s[a], s[b], s[c]
        if x > y:
            x, y = y, x
        if z < x:
            x = z
        elif z > y:
            y = z
        out.append((pos, x, y))
    return out


def subsample_anchors(img: GrayImage) -> GrayImage:
    """The ``M x N`` image of anchor pixels of a ``(2M-1) x (2N-1)`` image."""
    check_cover_shape(img)
    W = img.width
    s = img.samples
    out = b"".join(s[i * W:(i + 1) * W:2] for i in range(0, img.height, 2))
    return GrayImage((W + 1) // 2, (img.height + 1) // 2, out)
