"""
Shared fixtures: the named graphs used across the suite
"""

import pytest

from src.graph.edge_list import save_graph
from src.instances.generators import (
    complete_graph,
    cycle_graph,
    four_net_graph,
    net_graph,
    path_graph,
    star_graph,
)


@pytest.fixture
def net():
    """Triangle 0-1-2 with pendants 3-0, 4-1, 5-2"""
    return net_graph()


@pytest.fixture
def four_net():
    """K4 on 0..3 with pendants 4-0, 5-1, 6-2, 7-3"""
    return four_net_graph()


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def c6():
    return cycle_graph(6)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def k5():
    return complete_graph(5)


@pytest.fixture
def p4():
    return path_graph(4)


@pytest.fixture
def claw():
    """K_{1,3} with center 0"""
    return star_graph(3)


@pytest.fixture
def graph_file(tmp_path):
    """Write a graph to an edge-list file and return its path"""
    def _write(graph, name="graph.el"):
        return save_graph(graph, tmp_path / name)
    return _write
