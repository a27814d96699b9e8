import random

import pytest

from chiprank.graphs import MultiGraph


@pytest.fixture(scope="session")
def K3():
    return MultiGraph.complete(3)


@pytest.fixture(scope="session")
def K4():
    return MultiGraph.complete(4)


@pytest.fixture(scope="session")
def K5():
    return MultiGraph.complete(5)


@pytest.fixture(scope="session")
def W5():
    return MultiGraph.wheel(5)


@pytest.fixture(scope="session")
def multi4():
    """A 4-vertex multigraph with parallel edges."""
    return MultiGraph.from_edges(4, [(1, 2, 2), (2, 3, 1), (3, 4, 3), (1, 4, 1), (1, 3, 2)])


@pytest.fixture()
def rng():
    return random.Random(99)


SMALL_GRAPHS = [
    MultiGraph.complete(2),
    MultiGraph.complete(3),
    MultiGraph.complete(4),
    MultiGraph.wheel(4),
    MultiGraph.wheel(5),
    MultiGraph.from_edges(3, [(1, 2, 3), (2, 3, 1), (1, 3, 2)]),
    MultiGraph.from_edges(4, [(1, 2, 2), (2, 3, 1), (3, 4, 3), (1, 4, 1), (1, 3, 2)]),
    MultiGraph.from_edges(4, [(1, 2, 1), (2, 3, 1), (3, 4, 1), (1, 4, 1)]),  # 4-cycle
]
