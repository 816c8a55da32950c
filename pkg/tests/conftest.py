import pytest

from fibcube.graph import build_cube, cartesian_product, complete_graph, cycle_graph, hypercube, path_graph
from fibcube.words import CubeParams, Family


@pytest.fixture
def o224():
    """O(2,2,4): eight vertices, ten edges."""
    return build_cube(CubeParams(Family.O, 2, 2, 4))


@pytest.fixture
def q3():
    return hypercube(3)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def prism():
    """P3 x K2, vertex (g, h) at 2g + h."""
    return cartesian_product(path_graph(3), complete_graph(2))
