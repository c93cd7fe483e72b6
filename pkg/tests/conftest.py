import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from planepuzzle import moves
from planepuzzle.analysis import plane_for

_GENS_CACHE: dict[tuple[int, int], list] = {}


@pytest.fixture(scope="session")
def plane_of():
    return plane_for


@pytest.fixture(scope="session")
def gens_of():
    """Hole-group generators, cached across the whole test session."""

    def get(q: int, alpha: int = 0):
        key = (q, alpha)
        if key not in _GENS_CACHE:
            _GENS_CACHE[key] = moves.hole_group_generators(plane_for(q), alpha)
        return _GENS_CACHE[key]

    return get
