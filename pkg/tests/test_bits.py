import pytest
from hypothesis import given
from hypothesis import strategies as st

from nmihide.bits import BitString, BitWriter


def test_msb_first_bytes():
    assert str(BitString.from_bytes(b"\x80\x01")) == "1000000000000001"
    assert BitString("1").to_bytes() == b"\x80"
    assert BitString().to_bytes() == b""


def test_reader_slices_msb_first():
    r = BitString("110011010111010100").reader()
    assert [r.read(3), r.read(5), r.read(5)] == [6, 13, 14]
    assert r.remaining == 5
    assert r.read(0) == 0
    with pytest.raises(EOFError):
        r.read(6)


def test_writer_fixed_width():
    w = BitWriter()
    w.write(6, 3)
    w.write(13, 5)
    w.write(0, 1)
    w.write(0, 0)
    assert w.getvalue() == "110011010"
    with pytest.raises(ValueError):
        w.write(8, 3)


def test_from_int_and_validation():
    assert str(BitString.from_int(18, 32)) == "0" * 27 + "10010"
    with pytest.raises(ValueError):
        BitString.from_int(4, 2)
    with pytest.raises(ValueError):
        BitString("0120")
    assert BitString("1 0\n1") == "101"


def test_sequence_protocol():
    b = BitString([1, 0, 1, 1])
    assert len(b) == 4 and list(b) == [1, 0, 1, 1]
    assert b[1] == 0 and b[1:3] == "01"
    assert b + BitString("0") == "10110"
    assert hash(b) == hash(BitString("1011"))


@given(st.binary())
def test_bytes_round_trip(data):
    bits = BitString.from_bytes(data)
    assert len(bits) == 8 * len(data)
    assert bits.to_bytes() == data


@given(st.lists(st.integers(0, 12).flatmap(
    lambda k: st.tuples(st.just(k), st.integers(0, (1 << k) - 1)))))
def test_writer_reader_round_trip(groups):
    w = BitWriter()
    for k, v in groups:
        w.write(v, k)
    r = w.getvalue().reader()
    assert [r.read(k) for k, _ in groups] == [v for _, v in groups]
    assert r.remaining == 0
