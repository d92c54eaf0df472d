import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from nmihide.errors import (
    DimensionError,
    MalformedHeaderError,
    MaxvalError,
    TruncatedDataError,
)
from nmihide.image import GrayImage, constant, crop, downscale_half, load_pgm, save_pgm

from conftest import FIXTURES, GOLDEN_COVER


@st.composite
def gray_images(draw, max_side=12):
    w = draw(st.integers(1, max_side))
    h = draw(st.integers(1, max_side))
    data = draw(st.binary(min_size=w * h, max_size=w * h))
    return GrayImage(w, h, data)


def test_load_golden_pgm():
    img = load_pgm(b"P5\n2 2\n255\n" + bytes([152, 161, 185, 188]))
    assert img.rows() == [[152, 161], [185, 188]]
    assert img[1, 0] == 185


def test_load_minimal():
    assert load_pgm(b"P5 1 1 255\n\x00").rows() == [[0]]


def test_load_truncated():
    with pytest.raises(TruncatedDataError):
        load_pgm(b"P5\n2 2\n255\n" + bytes(3))


def test_load_header_comments_and_small_maxval():
    img = load_pgm(b"P5\n# made by hand\n3 1\n# another\n15\n\x00\x07\x0f")
    assert img.rows() == [[0, 7, 15]]


@pytest.mark.parametrize("data, exc", [
    (b"P2\n1 1\n255\n0", MalformedHeaderError),
    (b"P5\n1 x\n255\n\x00", MalformedHeaderError),
    (b"P5\n1 1", MalformedHeaderError),
    (b"P5\n0 1\n255\n", MalformedHeaderError),
    (b"P5\n1 1\n65535\n\x00\x00", MaxvalError),
    (b"P5\n1 1\n15\n\x20", MaxvalError),
    (b"P5\n1 1\n255", TruncatedDataError),
])
def test_load_errors(data, exc):
    with pytest.raises(exc):
        load_pgm(data)


def test_save_canonical():
    assert save_pgm(GrayImage.from_rows([[255]])) == b"P5\n1 1\n255\n\xff"


def test_fixture_file_matches_golden():
    img = load_pgm((FIXTURES / "golden_original.pgm").read_bytes())
    assert img.rows() == [[152, 161], [185, 188]]


@given(gray_images())
def test_pgm_round_trip(img):
    data = save_pgm(img)
    assert load_pgm(data) == img
    assert save_pgm(load_pgm(data)) == data


def test_samples_validated():
    with pytest.raises(ValueError):
        GrayImage(2, 2, bytes(3))
    with pytest.raises(ValueError):
        GrayImage.from_rows([[0, 256]])
    with pytest.raises(DimensionError):
        GrayImage(0, 1, b"")


def test_images_are_immutable(golden_original):
    with pytest.raises(AttributeError):
        golden_original.width = 3
    with pytest.raises(ValueError):
        golden_original.array[0, 0] = 1


def test_downscale_examples():
    assert downscale_half(GrayImage.from_rows([[152, 161], [185, 188]])).rows() == [[152]]
    src = np.add.outer(16 * np.arange(4), np.arange(4))
    # direct evaluation: keep rows 0, 2 and columns 0, 2
    expected = [[int(src[i, j]) for j in (0, 2)] for i in (0, 2)]
    assert expected == [[0, 2], [32, 34]]
    assert downscale_half(GrayImage.from_array(src)).rows() == expected
    out = downscale_half(constant(512, 512, 7))
    assert (out.width, out.height) == (256, 256)
    assert set(out.samples) == {7}


@given(gray_images())
def test_downscale_is_subsampling(img):
    if img.width < 2 or img.height < 2:
        with pytest.raises(DimensionError):
            downscale_half(img)
        return
    out = downscale_half(img)
    assert (out.width, out.height) == (img.width // 2, img.height // 2)
    assert np.array_equal(out.array, img.array[0:2 * out.height:2, 0:2 * out.width:2])


def test_crop_examples(golden_cover):
    assert crop(golden_cover, 3, 3) == golden_cover
    assert crop(golden_cover, 2, 2).rows() == [[152, 156], [168, 158]]
    with pytest.raises(DimensionError):
        crop(golden_cover, 4, 3)
    assert GOLDEN_COVER == golden_cover.rows()


@given(gray_images(), st.data())
def test_crop_preserves_samples(img, data):
    w = data.draw(st.integers(1, img.width))
    h = data.draw(st.integers(1, img.height))
    assert np.array_equal(crop(img, w, h).array, img.array[:h, :w])
