"""Reversible data hiding in neighbor-mean-interpolated grayscale images."""

from .bits import BitReader, BitString, BitWriter
from .errors import (
    BadImageError,
    CapacityError,
    CorruptStreamError,
    DimensionError,
    NmiHideError,
    PgmError,
)
from .image import GrayImage, crop, downscale_half, load_pgm, read_pgm, save_pgm, write_pgm
from .interpolation import Extrema, PixelClass, classify, neighbor_extrema, nmi_upscale
from .jungyoo import jy_capacity, jy_embed, jy_extract
from .metrics import QualityReport, bpp, gain_rate, mse, psnr
from .proposed import compute_capacity, embed, extract, recover_original, traversal_order
from .stream import HEADER_BITS, CapacityMap, EmbedResult

__version__ = "0.1.0"
