"""Shared payload framing and per-site bit writing/reading for both codecs.

A *site* is an embeddable pixel described by ``(flat_index, n_bits, base)``:
the stego value is ``base + dec`` where ``dec`` is the value of the next
``n_bits`` stream bits. The codecs differ only in how they derive sites.

In header mode the stream is a 32-bit big-endian payload bit count followed
by the payload. If the stream runs out partway through a site, only the
remaining ``r < n`` bits go there, as an ``r``-bit value; every later site
keeps its cover value.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Sequence

from .bits import BitString
from .errors import CapacityError, CorruptStreamError
from .image import GrayImage

HEADER_BITS = 32

# (flat_index, n_bits, base, min_val, max_val)
Site = tuple[int, int, int, int, int]


class CapacityEntry(NamedTuple):
    i: int
    j: int
    n_bits: int
    min_val: int
    max_val: int


class CapacityMap:
    """Per-pixel capacity in the order the codec consumes stream bits."""

    def __init__(self, width: int, height: int, sites: Sequence[Site]):
        self.width = width
        self.height = height
        self.sites = sites
        self.total_bits = sum(site[1] for site in sites)

    @cached_property
    def entries(self) -> tuple[CapacityEntry, ...]:
        W = self.width
        return tuple(
            CapacityEntry(pos // W, pos % W, n, lo, hi) for pos, n, _, lo, hi in self.sites)

    @property
    def payload_capacity(self) -> int:
        """Largest payload that fits alongside the length header."""
        return max(self.total_bits - HEADER_BITS, 0)

    def n_bits(self) -> list[int]:
        return [site[1] for site in self.sites]

    def __len__(self):
        return len(self.sites)

    def __repr__(self):
        return f"CapacityMap({self.width}x{self.height}, total_bits={self.total_bits})"


@dataclass(frozen=True, slots=True)
class EmbedResult:
    stego: GrayImage
    payload_bits_embedded: int
    header_bits: int
    capacity: CapacityMap

    @property
    def bits_embedded(self) -> int:
        return self.payload_bits_embedded + self.header_bits


def frame(payload: BitString, raw: bool = False) -> BitString:
    if raw:
        return payload
    if len(payload) >> HEADER_BITS:
        raise ValueError("payload longer than a 32-bit length header can describe")
    return BitString.from_int(len(payload), HEADER_BITS) + payload


def write_stream(cover: GrayImage, capacity: CapacityMap, stream: BitString) -> GrayImage:
    if len(stream) > capacity.total_bits:
        raise CapacityError(available=capacity.total_bits, required=len(stream))
    out = bytearray(cover.samples)
    bits = str(stream)
    cursor, end = 0, len(bits)
    for pos, n, base, _, _ in capacity.sites:
        if cursor == end:
            break
        if not n:
            continue
        r = min(n, end - cursor)
        out[pos] = base + int(bits[cursor:cursor + r], 2)
        cursor += r
    return GrayImage(cover.width, cover.height, bytes(out))


_FORMATS = [f"0{k}b" for k in range(33)]


def _decoded(values: bytes, pos: int, base: int, n: int) -> int:
    dec = values[pos] - base
    if dec < 0 or dec >> n:
        raise CorruptStreamError(
            f"pixel {pos} holds offset {dec}, outside the {n}-bit range")
    return dec


def read_stream(stego: GrayImage, capacity: CapacityMap, raw: bool = False) -> BitString:
    values = stego.samples
    chunks = []
    if raw:
        for pos, n, base, _, _ in capacity.sites:
            if n:
                dec = values[pos] - base
                if dec < 0 or dec >> n:
                    _decoded(values, pos, base, n)
                chunks.append(format(dec, _FORMATS[n]))
        return BitString._wrap("".join(chunks))

    total = capacity.total_bits
    if total < HEADER_BITS:
        raise CorruptStreamError(f"capacity {total} cannot hold a {HEADER_BITS}-bit header")
    header = 0
    got = 0
    need = None  # total stream length once the header is known
    for pos, n, base, _, _ in capacity.sites:
        if not n:
            continue
        if need is None:
            h = HEADER_BITS - got
            if n <= h:
                header = (header << n) | _decoded(values, pos, base, n)
                got += n
                if got == HEADER_BITS:
                    need = HEADER_BITS + _checked_length(header, total)
                continue
            dec = values[pos] - base
            r, length = _resolve_header_tail(header, dec, h, n, got)
            need = HEADER_BITS + _checked_length(length, total)
            if r > h:
                chunks.append(format(dec & ((1 << (r - h)) - 1), _FORMATS[r - h]))
            got += r
            continue
        if got == need:
            break
        r = min(n, need - got)
        chunks.append(format(_decoded(values, pos, base, r), _FORMATS[r]))
        got += r
    if need is None or got < need:
        raise CorruptStreamError("stream ended before the declared payload length")
    return BitString._wrap("".join(chunks))


def _checked_length(length: int, total: int) -> int:
    if HEADER_BITS + length > total:
        raise CorruptStreamError(
            f"header declares {length} payload bits but only {total - HEADER_BITS} fit")
    return length


def _resolve_header_tail(prefix: int, dec: int, h: int, n: int, got: int) -> tuple[int, int]:
    """Split a site whose ``n`` bits straddle the end of the length header.

    The site holds ``r`` bits (``h <= r <= n``), of which the first ``h`` finish
    the header. ``r < n`` only when the stream ends inside this site, which
    pins the declared length to ``got + r - HEADER_BITS``. At most one ``r``
    is self-consistent.
    """
    if dec < 0:
        raise CorruptStreamError(f"negative offset {dec} while reading the header")
    for r in range(h, n + 1):
        if dec >> r:
            continue
        length = (prefix << h) | (dec >> (r - h))
        if r < n and HEADER_BITS + length == got + r:
            return r, length
        if r == n and HEADER_BITS + length >= got + n:
            return r, length
    raise CorruptStreamError("inconsistent length header")
