import sys
from pathlib import Path

import pytest

from nmihide.bits import BitString
from nmihide.image import GrayImage

TESTS = Path(__file__).parent
FIXTURES = TESTS / "fixtures"
sys.path.insert(0, str(TESTS))

GOLDEN_ORIGINAL = [[152, 161], [185, 188]]
GOLDEN_COVER = [[152, 156, 161], [168, 158, 174], [185, 186, 188]]
GOLDEN_STEGO = [[152, 158, 161], [165, 166, 171], [185, 185, 188]]
GOLDEN_BITS = "110011010111010100"

_acceptance_lines: list[str] = []


@pytest.fixture
def golden_original():
    return GrayImage.from_rows(GOLDEN_ORIGINAL)


@pytest.fixture
def golden_cover():
    return GrayImage.from_rows(GOLDEN_COVER)


@pytest.fixture
def golden_stego():
    return GrayImage.from_rows(GOLDEN_STEGO)


@pytest.fixture
def golden_bits():
    return BitString(GOLDEN_BITS)


@pytest.fixture(scope="session")
def acceptance_log():
    return _acceptance_lines


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
