import logging
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from ddt.models.graph import Graph
from ddt.services.constructions import disjoint_cliques


@pytest.fixture
def p3():
    """Path a-b-c on vertices 0-1-2."""
    return Graph.from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture
def c5():
    return Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])


@pytest.fixture
def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


@pytest.fixture
def star():
    """K_{1,3} with centre 0."""
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def k4():
    return disjoint_cliques(1, 4)


@pytest.fixture(autouse=True)
def restore_root_logging():
    """The CLI replaces root handlers; put back whatever pytest installed."""
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)
