import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from eisres.padics import PadicRing


_RING_CACHE = {}


def get_ring(p, m, cap):
    key = (p, m, cap)
    if key not in _RING_CACHE:
        _RING_CACHE[key] = PadicRing(p, m, cap)
    return _RING_CACHE[key]


@pytest.fixture(scope="session")
def ring5():
    return get_ring(5, 4, 22)


@pytest.fixture(scope="session")
def ring7():
    return get_ring(7, 6, 20)
