"""MSB-first bit strings with cursor-based reading and appending writers."""

from __future__ import annotations

from typing import Iterable, Union


class BitString:
    """Immutable ordered sequence of bits.

    Internally a ``str`` of ``'0'``/``'1'`` characters, which makes slicing and
    ``int(chunk, 2)`` conversion cheap for payloads of a few hundred kilobits.
    """

    __slots__ = ("_bits",)

    def __init__(self, bits: Union[str, Iterable[int], "BitString"] = ""):
        if isinstance(bits, BitString):
            s = bits._bits
        elif isinstance(bits, str):
            s = "".join(bits.split())
            if s.strip("01"):
                raise ValueError("bit string may only contain '0' and '1'")
        else:
            s = "".join("1" if b else "0" for b in bits)
        self._bits = s

    @classmethod
    def from_bytes(cls, data: bytes) -> "BitString":
        """Bits of each byte MSB-first, bytes in order."""
        if not data:
            return cls()
        return cls._wrap(format(int.from_bytes(data, "big"), f"0{8 * len(data)}b"))

    @classmethod
    def from_int(cls, value: int, width: int) -> "BitString":
        if value < 0 or value >> width:
            raise ValueError(f"{value} does not fit in {width} bits")
        return cls._wrap(format(value, f"0{width}b") if width else "")

    @classmethod
    def _wrap(cls, s: str) -> "BitString":
        obj = cls.__new__(cls)
        obj._bits = s
        return obj

    def to_bytes(self) -> bytes:
        """Pack MSB-first; a trailing partial byte is zero-padded on the right."""
        n = len(self._bits)
        if not n:
            return b""
        pad = -n % 8
        return int(self._bits + "0" * pad, 2).to_bytes((n + pad) // 8, "big")

    def to_int(self) -> int:
        return int(self._bits, 2) if self._bits else 0

    def reader(self) -> "BitReader":
        return BitReader(self)

    def __len__(self):
        return len(self._bits)

    def __iter__(self):
        return map(int, self._bits)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return BitString._wrap(self._bits[index])
        return 1 if self._bits[index] == "1" else 0

    def __add__(self, other: "BitString") -> "BitString":
        return BitString._wrap(self._bits + BitString(other)._bits)

    def __eq__(self, other):
        if isinstance(other, BitString):
            return self._bits == other._bits
        if isinstance(other, str):
            return self._bits == other
        return NotImplemented

    def __hash__(self):
        return hash(self._bits)

    def __str__(self):
        return self._bits

    def __repr__(self):
        if len(self._bits) > 64:
            return f"BitString('{self._bits[:64]}...', len={len(self._bits)})"
        return f"BitString('{self._bits}')"


class BitReader:
    """Sequential cursor over a :class:`BitString`."""

    def __init__(self, bits: BitString):
        self._bits = bits._bits
        self.cursor = 0

    @property
    def remaining(self) -> int:
        return len(self._bits) - self.cursor

    def read(self, k: int) -> int:
        """Consume ``k`` bits and return their MSB-first value."""
        if k < 0:
            raise ValueError("negative read")
        end = self.cursor + k
        if end > len(self._bits):
            raise EOFError(f"read of {k} bits with only {self.remaining} remaining")
        chunk = self._bits[self.cursor:end]
        self.cursor = end
        return int(chunk, 2) if k else 0


class BitWriter:
    def __init__(self):
        self._chunks: list[str] = []
        self._length = 0

    def __len__(self):
        return self._length

    def write(self, value: int, k: int) -> None:
        """Append ``value`` as exactly ``k`` bits, MSB first."""
        if k == 0:
            if value:
                raise ValueError(f"{value} does not fit in 0 bits")
            return
        if value < 0 or value >> k:
            raise ValueError(f"{value} does not fit in {k} bits")
        self._chunks.append(format(value, f"0{k}b"))
        self._length += k

    def getvalue(self) -> BitString:
        return BitString._wrap("".join(self._chunks))
