"""
Tests for RootedTree, classification and the depth-first spanning tree
"""

import pytest

from src.exceptions import DisconnectedGraphError, TreeStructureError
from src.graph.graph import Graph
from src.instances.generators import cycle_graph, path_graph, random_connected, spider, star_graph
from src.oracle.enumeration import enumerate_spanning_trees
from src.trees.rooted_tree import RootedTree, classify, dfs_spanning_tree


@pytest.fixture
def path_tree():
    """Path 0-1-2-3 rooted at 0"""
    return RootedTree.from_edges(4, [(0, 1), (1, 2), (2, 3)], 0)


@pytest.fixture
def star_tree():
    """Star K_{1,3} rooted at the center 0"""
    return RootedTree.from_edges(4, [(0, 1), (0, 2), (0, 3)], 0)


class TestConstruction:
    """Tests for building rooted trees"""

    def test_from_edges(self, path_tree):
        """Test building a rooted path from edges"""
        assert path_tree.root == 0
        assert path_tree.parents() == (None, 0, 1, 2)
        assert path_tree.children(1) == (2,)
        assert path_tree.depth(3) == 3
        assert path_tree.edges() == ((0, 1), (1, 2), (2, 3))

    def test_degree_counts_parent(self, path_tree, star_tree):
        """Test degrees count the parent edge"""
        assert [path_tree.degree(v) for v in range(4)] == [1, 2, 2, 1]
        assert star_tree.degree(0) == 3

    def test_wrong_edge_count(self):
        with pytest.raises(TreeStructureError):
            RootedTree.from_edges(4, [(0, 1), (1, 2)])

    def test_cycle_rejected(self):
        """Test an edge set with a cycle is rejected"""
        with pytest.raises(TreeStructureError, match="disconnected or contains a cycle"):
            RootedTree.from_edges(4, [(0, 1), (1, 2), (0, 2)])

    def test_foreign_edges_rejected(self):
        """Test edges outside the host graph are rejected"""
        graph = path_graph(4)
        with pytest.raises(TreeStructureError) as excinfo:
            RootedTree.from_edges(4, [(0, 1), (1, 2), (1, 3)], graph=graph)

        assert excinfo.value.edges == frozenset({(1, 3)})

    def test_parent_array_validation(self):
        """Test invalid parent arrays are rejected"""
        with pytest.raises(TreeStructureError):
            RootedTree(0, [1, None])
        with pytest.raises(TreeStructureError):
            RootedTree(0, [None, 2, 1])

    def test_rerooted_keeps_edges(self, path_tree):
        """Test rerooting keeps the edge set"""
        rerooted = path_tree.rerooted(2)

        assert rerooted.root == 2
        assert rerooted.edge_set() == path_tree.edge_set()
        assert rerooted.parent(3) == 2
        assert path_tree.rerooted(0) is path_tree

    def test_spans(self, path_tree):
        assert path_tree.spans(cycle_graph(4))
        assert not path_tree.spans(star_graph(3))


class TestPaths:
    """Tests for path queries and endpoint notation"""

    def test_path_between(self, path_tree, star_tree):
        assert path_tree.path_between(0, 3) == [0, 1, 2, 3]
        assert path_tree.path_between(3, 0) == [3, 2, 1, 0]
        assert path_tree.path_between(2, 2) == [2]
        assert star_tree.path_between(1, 2) == [1, 0, 2]

    def test_toward(self, path_tree, star_tree):
        """Test the first step from one vertex toward another"""
        assert path_tree.toward(0, 3) == 1
        assert path_tree.toward(3, 0) == 2
        assert star_tree.toward(1, 2) == 0

    def test_toward_same_vertex(self, path_tree):
        """Test toward is undefined for equal vertices"""
        with pytest.raises(ValueError):
            path_tree.toward(1, 1)

    def test_far_endpoint(self, path_tree, star_tree):
        """Test the far endpoint of a tree edge"""
        assert path_tree.far_endpoint((1, 2), 0) == 2
        assert path_tree.far_endpoint((1, 2), 2) == 1
        assert star_tree.far_endpoint((0, 1), 2) == 1

    def test_near_and_far_are_consistent(self, path_tree):
        """Test near and far endpoints are the two ends of the edge"""
        for edge in path_tree.edges():
            assert path_tree.far_endpoint(edge, 0) == path_tree.near_endpoint(edge, 3)

    def test_lca_distance_median(self, path_tree, star_tree):
        assert path_tree.lca(2, 3) == 2
        assert path_tree.distance(0, 3) == 3
        assert path_tree.median(0, 2, 3) == 2
        assert star_tree.median(1, 2, 3) == 0
        assert star_tree.distance(1, 3) == 2

    def test_on_path_and_subtree(self, path_tree):
        """Test on_path and subtree"""
        assert path_tree.on_path(1, 0, 3)
        assert not path_tree.on_path(0, 1, 3)
        assert path_tree.subtree(2) == [2, 3]

    def test_lower_endpoint_rejects_non_edges(self, path_tree):
        """Test lower_endpoint on a non-edge"""
        with pytest.raises(ValueError):
            path_tree.lower_endpoint((0, 2))


class TestClassification:
    """Tests for leaf and branch classification"""

    def test_path(self, path_tree):
        """Test classification of a path"""
        cls = classify(path_tree)

        assert cls.leaves == frozenset({0, 3})
        assert cls.branch == frozenset()

    def test_star(self, star_tree):
        """Test classification of a star"""
        cls = classify(star_tree)

        assert cls.leaves == frozenset({1, 2, 3})
        assert cls.branch == frozenset({0})
        assert cls.with_degree(3) == frozenset({0})
        assert cls.with_degree_at_least(4) == frozenset()

    def test_spider(self):
        tree = dfs_spanning_tree(spider(3, 2), 0)
        cls = classify(tree)

        assert cls.with_degree(3) == frozenset({0})
        assert len(cls.leaves) == 3

    def test_single_vertex_rejected(self):
        """Test classification needs two vertices"""
        with pytest.raises(ValueError):
            classify(RootedTree.from_edges(1, []))

    @pytest.mark.parametrize("seed", range(5))
    def test_leaf_identities_on_every_spanning_tree(self, seed):
        """Test the leaf identities on every spanning tree of a random graph"""
        graph = random_connected(7, 4, seed)

        def visit(edges):
            tree = RootedTree.from_edges(graph.vertex_count, edges)
            cls = classify(tree)
            assert len(cls.leaves) == 2 + sum(tree.degree(b) - 2 for b in cls.branch)
            assert len(cls.leaves) >= len(cls.branch) + 2
            assert not cls.leaves & cls.branch

        assert enumerate_spanning_trees(graph, visit) > 0


class TestDfsSpanningTree:
    """Tests for the initial depth-first tree"""

    def test_cycle_gives_path(self):
        """Test the DFS tree of a cycle is a path"""
        tree = dfs_spanning_tree(cycle_graph(5), 0)
        assert tree.edges() == ((0, 1), (1, 2), (2, 3), (3, 4))

    def test_tree_input_is_reproduced(self):
        """Test the DFS tree of a tree is the tree itself"""
        graph = spider(3, 2)
        tree = dfs_spanning_tree(graph, 4)

        assert tree.root == 4
        assert tree.edges() == graph.edges()

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            dfs_spanning_tree(Graph(4, [(0, 1), (2, 3)]), 0)

    def test_root_out_of_range(self):
        """Test DFS from a root outside the graph"""
        with pytest.raises(ValueError):
            dfs_spanning_tree(path_graph(3), 5)
