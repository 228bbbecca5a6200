from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from linca2d.grid import Grid, parse_grid

SAMPLE_IN_TEXT = "0010\n1110\n1011\n"
SAMPLE_OUT_TEXT = "1011\n0010\n1101\n"


@pytest.fixture
def sample_in() -> Grid:
    return parse_grid(SAMPLE_IN_TEXT)


@pytest.fixture
def sample_out() -> Grid:
    return parse_grid(SAMPLE_OUT_TEXT)


@pytest.fixture
def sample_file(tmp_path: Path) -> Path:
    path = tmp_path / "sample.txt"
    path.write_text(SAMPLE_IN_TEXT)
    return path
