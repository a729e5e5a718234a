import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from unmixed import build  # noqa: E402

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"


def mixed_clutter():
    return build([1, 2, 3, 4], [[1, 2], [1, 3], [1, 4], [2, 3, 4]])


def unmixed_clutter():
    return build([1, 2, 3, 4], [[1, 2, 3], [1, 4], [3, 4]])


def nine_vertex():
    return build("abcdefghi", ["abc", "def", "ghi", "bge", "cfh"])


NINE_VERTEX_ROWS = [["a", "b", "c"], ["e", "f", "d"], ["h", "i", "g"]]

BIPARTITE_NAMES = ["x11", "x12", "x21", "x22", "x31", "x32"]
BIPARTITE_ROWS = [["x11", "x12"], ["x21", "x22"], ["x31", "x32"]]


def bipartite_failure():
    """Three row edges plus x11-x22 and x21-x32 (x11-x32 missing)."""
    rows = [list(r) for r in BIPARTITE_ROWS]
    return build(BIPARTITE_NAMES, rows + [["x11", "x22"], ["x21", "x32"]])


@pytest.fixture
def fixtures_dir():
    return FIXTURES


@pytest.fixture
def golden_dir():
    return GOLDEN
