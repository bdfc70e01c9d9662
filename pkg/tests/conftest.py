import pytest

from gpgraph import CubicGraph, GpParams, build


@pytest.fixture(scope="session")
def petersen():
    g, _ = build(GpParams(5, 2))
    return g


@pytest.fixture(scope="session")
def k33():
    return CubicGraph([(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)])


PRISM_EDGES = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
