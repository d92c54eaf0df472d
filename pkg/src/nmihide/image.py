"""Grayscale image value type, binary PGM I/O, subsampling and cropping."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionError, MalformedHeaderError, MaxvalError, TruncatedDataError


@dataclass(frozen=True, slots=True)
class GrayImage:
    """Immutable 8-bit grayscale image with row-major samples.

    ``img[i, j]`` addresses row ``i``, column ``j``.
    """

    width: int
    height: int
    samples: bytes

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise DimensionError(f"image dimensions must be >= 1, got {self.width}x{self.height}")
        if type(self.samples) is not bytes:
            object.__setattr__(self, "samples", bytes(self.samples))
        if len(self.samples) != self.width * self.height:
            raise ValueError(
                f"expected {self.width * self.height} samples, got {len(self.samples)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "GrayImage":
        height = len(rows)
        width = len(rows[0]) if height else 0
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        flat = [v for r in rows for v in r]
        if any(v < 0 or v > 255 for v in flat):
            raise ValueError("samples must lie in [0, 255]")
        return cls(width, height, bytes(flat))

    @classmethod
    def from_array(cls, array: np.ndarray) -> "GrayImage":
        array = np.asarray(array)
        if array.ndim != 2:
            raise ValueError("expected a 2-D array")
        if array.min(initial=0) < 0 or array.max(initial=0) > 255:
            raise ValueError("samples must lie in [0, 255]")
        h, w = array.shape
        return cls(w, h, array.astype(np.uint8).tobytes())

    @property
    def shape(self) -> tuple[int, int]:
        """(height, width), numpy order."""
        return self.height, self.width

    @property
    def array(self) -> np.ndarray:
        """Read-only ``(height, width)`` uint8 view of the samples."""
        return np.frombuffer(self.samples, dtype=np.uint8).reshape(self.height, self.width)

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        if not (0 <= i < self.height and 0 <= j < self.width):
            raise IndexError(f"pixel ({i}, {j}) outside {self.width}x{self.height} image")
        return self.samples[i * self.width + j]

    def rows(self) -> list[list[int]]:
        w = self.width
        return [list(self.samples[r * w:(r + 1) * w]) for r in range(self.height)]

    def __repr__(self):
        return f"GrayImage({self.width}x{self.height})"


_WHITESPACE = b" \t\n\v\f\r"


def _next_token(data: bytes, pos: int) -> tuple[bytes, int]:
    n = len(data)
    while True:
        while pos < n and data[pos] in _WHITESPACE:
            pos += 1
        if pos < n and data[pos] == ord("#"):
            eol = data.find(b"\n", pos)
            if eol < 0:
                raise MalformedHeaderError("unterminated comment in header")
            pos = eol + 1
            continue
        break
    start = pos
    while pos < n and data[pos] not in _WHITESPACE and data[pos] != ord("#"):
        pos += 1
    if start == pos:
        raise MalformedHeaderError("incomplete header")
    return data[start:pos], pos


def load_pgm(data: bytes) -> GrayImage:
    """Parse a binary ``P5`` graymap with maxval <= 255. Samples are not rescaled."""
    if data[:2] != b"P5" or len(data) < 3 or data[2] not in _WHITESPACE:
        raise MalformedHeaderError("missing P5 magic number")
    pos = 2
    fields = []
    for _ in range(3):
        token, pos = _next_token(data, pos)
        if not token.isdigit():
            raise MalformedHeaderError(f"non-numeric header field {token!r}")
        fields.append(int(token))
    width, height, maxval = fields
    if width < 1 or height < 1:
        raise MalformedHeaderError(f"invalid dimensions {width}x{height}")
    if maxval < 1 or maxval > 255:
        raise MaxvalError(f"unsupported maxval {maxval}")
    if pos >= len(data):
        raise TruncatedDataError("no raster data after header")
    if data[pos] not in _WHITESPACE:
        raise MalformedHeaderError("header not terminated by whitespace")
    # exactly one whitespace byte separates header and raster
    pos += 1
    n = width * height
    raster = data[pos:pos + n]
    if len(raster) < n:
        raise TruncatedDataError(f"expected {n} sample bytes, got {len(raster)}")
    if maxval < 255 and max(raster) > maxval:
        raise MaxvalError(f"sample exceeds maxval {maxval}")
    return GrayImage(width, height, bytes(raster))


def save_pgm(img: GrayImage) -> bytes:
    return b"P5\n%d %d\n255\n" % (img.width, img.height) + img.samples


def read_pgm(path) -> GrayImage:
    return load_pgm(Path(path).read_bytes())


def write_pgm(path, img: GrayImage) -> None:
    Path(path).write_bytes(save_pgm(img))


def downscale_half(img: GrayImage) -> GrayImage:
    """Keep every even-coordinate sample, giving a floor(w/2) x floor(h/2) image."""
    if img.width < 2 or img.height < 2:
        raise DimensionError(f"cannot halve a {img.width}x{img.height} image")
    w2, h2 = img.width // 2, img.height // 2
    w = img.width
    s = img.samples
    out = bytearray()
    for m in range(h2):
        row = s[2 * m * w:2 * m * w + 2 * w2]
        out += row[::2]
    return GrayImage(w2, h2, bytes(out))


def crop(img: GrayImage, w: int, h: int) -> GrayImage:
    """Top-left ``w`` x ``h`` sub-image."""
    if not (1 <= w <= img.width and 1 <= h <= img.height):
        raise DimensionError(f"cannot crop {w}x{h} from {img.width}x{img.height}")
    if (w, h) == (img.width, img.height):
        return img
    s = img.samples
    out = b"".join(s[r * img.width:r * img.width + w] for r in range(h))
    return GrayImage(w, h, out)


def constant(width: int, height: int, value: int) -> GrayImage:
    return GrayImage(width, height, bytes([value]) * (width * height))


def iter_pgm_paths(directory) -> Iterable[Path]:
    return sorted(p for p in Path(directory).iterdir() if p.suffix.lower() in (".pgm", ".pnm"))
