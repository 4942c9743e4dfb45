import os
import sys

import pytest

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if ROOT not in sys.path:
    sys.path.insert(0, ROOT)

from services.tower import build  # noqa: E402
from topology.complex import SimplicialComplex  # noqa: E402


@pytest.fixture(autouse=True)
def no_run_records(monkeypatch):
    from config import FLAGS

    monkeypatch.setattr(FLAGS, "LOGGING_ENABLED", False)


@pytest.fixture(scope="session")
def tower4():
    return build(4)


@pytest.fixture(scope="session")
def tower6():
    return build(6)


@pytest.fixture
def hexagon():
    return SimplicialComplex.from_facets([(-3, 1), (1, 2), (2, 3), (3, -1), (-1, -2), (-2, -3)])


@pytest.fixture
def tetrahedron_boundary():
    return SimplicialComplex.from_facets([(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)])


def icosahedron_facets():
    """Apex 1, upper ring 2-6, lower ring 7-11, apex 12."""
    top, bottom = 1, 12
    upper = [2, 3, 4, 5, 6]
    lower = [7, 8, 9, 10, 11]
    facets = []
    for i in range(5):
        j = (i + 1) % 5
        facets.append((top, upper[i], upper[j]))
        facets.append((upper[i], upper[j], lower[i]))
        facets.append((upper[j], lower[i], lower[j]))
        facets.append((bottom, lower[i], lower[j]))
    return facets


@pytest.fixture
def icosahedron():
    return SimplicialComplex.from_facets(icosahedron_facets())


@pytest.fixture(scope="session")
def tower7():
    return build(7, match_reference=True)
