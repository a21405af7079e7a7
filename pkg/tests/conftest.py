from __future__ import annotations

import pytest

from qextremal.graphs import make_circulant, make_turan_pair_graph


@pytest.fixture(scope="session")
def t4():
    return make_turan_pair_graph(4)


@pytest.fixture(scope="session")
def circulant12():
    return make_circulant(12, (1, 3, 6))


# the adjacency matrix of the paired-clique graph on 8 vertices, as printed
PAIRED_CLIQUE_8 = [
    [0, 1, 1, 1, 1, 0, 0, 0],
    [1, 0, 1, 1, 0, 1, 0, 0],
    [1, 1, 0, 1, 0, 0, 1, 0],
    [1, 1, 1, 0, 0, 0, 0, 1],
    [1, 0, 0, 0, 0, 1, 1, 1],
    [0, 1, 0, 0, 1, 0, 1, 1],
    [0, 0, 1, 0, 1, 1, 0, 1],
    [0, 0, 0, 1, 1, 1, 1, 0],
]
