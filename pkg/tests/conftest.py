"""
Shared fixtures: repository root on sys.path, golden Blackpool data, small profiles
"""
import sys
from fractions import Fraction
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from src.profile.ballots import CandidateSet, profile_from_rankings  # noqa: E402
from src.profile.llull_matrix import LlullMatrix  # noqa: E402

BLACKPOOL_NAMES = ('3', '4', '31', '122', '238', '264')
BLACKPOOL_VOTERS = 44
BLACKPOOL_COUNTS = [
    [0, 23, 28, 23, 28, 20],
    [21, 0, 23, 20, 30, 24],
    [16, 21, 0, 15, 25, 18],
    [21, 24, 29, 0, 28, 23],
    [16, 14, 19, 16, 0, 19],
    [24, 20, 26, 21, 25, 0],
]
BLACKPOOL_ORDER = ('122', '4', '264', '3', '31', '238')
BLACKPOOL_RATES = {
    '122': Fraction(37, 11),
    '4': Fraction(149, 44),
    '264': Fraction(75, 22),
    '3': Fraction(151, 44),
    '31': Fraction(157, 44),
    '238': Fraction(169, 44),
}
BLACKPOOL_RATES_LINE = "3.3636 3.3864 3.4091 3.4318 3.5682 3.8409"


@pytest.fixture
def data_dir() -> Path:
    return ROOT / 'data'


@pytest.fixture
def blackpool() -> LlullMatrix:
    return LlullMatrix.from_counts(CandidateSet(BLACKPOOL_NAMES), BLACKPOOL_COUNTS, BLACKPOOL_VOTERS)


@pytest.fixture
def cyclic_profile():
    return profile_from_rankings(['A', 'B', 'C'], [(1, 'A > B > C'), (1, 'B > C > A'), (1, 'C > A > B')])
