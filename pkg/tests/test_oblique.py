"""
Tests for oblique neighbours and pseudoadjacency
"""

import pytest

from src.graph.graph import Graph
from src.graph.properties import line_graph
from src.instances.generators import SplitMix64, complete_graph, cycle_graph, net_graph, path_graph, random_connected
from src.trees.oblique import (
    edges_without_oblique_neighbor,
    has_oblique_neighbor_in,
    is_oblique_neighbor,
    is_pseudoindependent,
    oblique_degree,
    oblique_witnesses,
    pseudoadjacency_witness,
)
from src.trees.rooted_tree import RootedTree, dfs_spanning_tree


@pytest.fixture
def path_tree():
    return RootedTree.from_edges(4, [(0, 1), (1, 2), (2, 3)], 0)


@pytest.fixture
def c6_path_tree():
    return RootedTree.from_edges(6, [(i, i + 1) for i in range(5)], 0)


def test_chord_makes_oblique_neighbor(path_tree):
    """Test a chord makes a vertex oblique to a tree edge"""
    with_chord = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 2)])

    assert is_oblique_neighbor(with_chord, path_tree, 0, (1, 2))
    assert not is_oblique_neighbor(path_graph(4), path_tree, 0, (1, 2))


def test_endpoints_are_oblique_neighbors(path_tree):
    """Test both endpoints are oblique neighbours of their edge"""
    graph = path_graph(4)
    for a, b in path_tree.edges():
        assert is_oblique_neighbor(graph, path_tree, a, (a, b))
        assert is_oblique_neighbor(graph, path_tree, b, (a, b))


def test_oblique_degree_examples(path_tree, c6_path_tree):
    assert [oblique_degree(path_graph(4), path_tree, v) for v in range(4)] == [1, 2, 2, 1]
    assert oblique_degree(cycle_graph(6), c6_path_tree, 0) == 2

    witnesses = oblique_witnesses(cycle_graph(6), c6_path_tree, 0)
    assert [w.edge for w in witnesses] == [(0, 1), (4, 5)]
    assert witnesses[1].far == 5

    star = RootedTree.from_edges(4, [(0, 1), (0, 2), (0, 3)], 0)
    assert oblique_degree(complete_graph(4), star, 3) == 3


def test_oblique_degree_identity_on_random_trees():
    """Test oblique_degree equals the graph degree on random trees"""
    rng = SplitMix64(2024)
    pairs = 0
    for _ in range(1000):
        nv = 3 + rng.below(6)
        extra = rng.below(nv * (nv - 1) // 2 - (nv - 1) + 1)
        graph = random_connected(nv, extra, rng.next_u64())
        tree = dfs_spanning_tree(graph, rng.below(nv))
        for v in graph.vertices():
            assert oblique_degree(graph, tree, v) == graph.degree(v)
        pairs += 1
    assert pairs == 1000


def test_pseudoadjacency_examples(c6_path_tree, path_tree):
    """Test pseudoadjacency witnesses on small trees"""
    assert pseudoadjacency_witness(cycle_graph(6), c6_path_tree, 0, 5) == (0, 1)
    assert pseudoadjacency_witness(path_graph(4), path_tree, 0, 3) is None
    assert pseudoadjacency_witness(path_graph(4), path_tree, 1, 2) == (1, 2)


def test_pseudoadjacency_needs_distinct_vertices(path_tree):
    with pytest.raises(ValueError):
        pseudoadjacency_witness(path_graph(4), path_tree, 2, 2)


def test_pseudoindependence(c6_path_tree):
    """Test pseudoindependence on C6 and on the net fixpoint"""
    net = net_graph()
    fixpoint = RootedTree.from_edges(6, [(0, 3), (0, 1), (0, 2), (1, 4), (2, 5)], 0)

    assert is_pseudoindependent(cycle_graph(6), c6_path_tree, [3])
    assert not is_pseudoindependent(cycle_graph(6), c6_path_tree, [0, 5])
    assert is_pseudoindependent(net, fixpoint, [4, 5])


def test_adjacent_vertices_are_pseudoadjacent_and_symmetric():
    """Test adjacent vertices are pseudoadjacent in both orders"""
    for seed in range(40):
        graph = line_graph(random_connected(6, seed % 5, seed))
        tree = dfs_spanning_tree(graph, 0)
        for u in graph.vertices():
            for v in graph.vertices():
                if u == v:
                    continue
                forward = pseudoadjacency_witness(graph, tree, u, v) is not None
                backward = pseudoadjacency_witness(graph, tree, v, u) is not None
                assert forward == backward
                if graph.has_edge(u, v):
                    assert forward


def test_edges_without_oblique_neighbor(path_tree):
    graph = path_graph(4)

    assert edges_without_oblique_neighbor(graph, path_tree, [0]) == ((1, 2), (2, 3))
    assert has_oblique_neighbor_in(graph, path_tree, (0, 1), [0, 3])
    assert not has_oblique_neighbor_in(graph, path_tree, (1, 2), [0, 3])
