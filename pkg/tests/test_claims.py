"""
Tests for the claim guards and the exchange fallback

Each guard test builds a spanning tree by hand together with a host graph
that violates exactly that guard, so the scan reaches it and accepts its
first listed repair.
"""

import pytest

from src.exceptions import SolverAnomaly
from src.graph.graph import Graph
from src.instances.generators import complete_graph, cycle_graph, net_graph
from src.solver.claims import ALL_TAGS, EXCHANGE_TAG, exchange_repair, find_violation, regime, witness_pool
from src.trees.potential import potential
from src.trees.rooted_tree import RootedTree, classify


def host_and_tree(vertex_count, tree_edges, extra_edges, root=0):
    """Host graph = tree edges plus extra_edges, and the tree rooted at root"""
    graph = Graph(vertex_count, list(tree_edges) + list(extra_edges))
    tree = RootedTree.from_edges(vertex_count, tree_edges, root, graph=graph)
    return graph, tree


def assert_repair(violation, tag, context, remove, add):
    assert violation is not None
    assert violation.claim_tag == tag
    assert violation.context == context
    assert violation.move.remove == frozenset(remove)
    assert violation.move.add == frozenset(add)
    assert violation.after < violation.before
    assert potential(violation.tree) == violation.after


@pytest.fixture
def k4_star():
    return RootedTree.from_edges(4, [(0, 1), (0, 2), (0, 3)], 0)


@pytest.fixture
def k5_star():
    return RootedTree.from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)], 0)


@pytest.fixture
def net_dfs_tree():
    """Depth-first tree of the net graph after the root policy (root 1)"""
    return RootedTree.from_edges(6, [(0, 1), (1, 2), (2, 5), (1, 4), (0, 3)], 1)


class TestRegime:
    """Tests for regime selection and the witness pool"""

    def test_degree_three_branch_vertex_means_case2(self, k4_star):
        assert regime(classify(k4_star)) == "case2"

    def test_no_degree_three_means_case1(self, k5_star):
        assert regime(classify(k5_star)) == "case1"

    def test_witness_pool_excludes_root(self, net_dfs_tree):
        """Test H drops the root even though it is in B_3"""
        assert witness_pool(net_dfs_tree, classify(net_dfs_tree)) == [3, 4, 5]

    def test_tags_are_unique(self):
        assert len(set(ALL_TAGS)) == len(ALL_TAGS)


class TestFindViolation:
    """Tests for guard scanning"""

    def test_adjacent_leaves_in_k4_star(self, k4_star):
        """Test two adjacent leaves of a degree-3 star trigger claim7"""
        violation = find_violation(complete_graph(4), k4_star, m=1, n=2)

        assert violation.claim_tag == "claim7"
        assert violation.move.remove == frozenset({(0, 1)})
        assert violation.move.add == frozenset({(1, 2)})
        assert violation.after < violation.before

    def test_adjacent_children_in_k5_star(self, k5_star):
        """Test adjacent children with an oblique leaf trigger claim2"""
        violation = find_violation(complete_graph(5), k5_star, m=1, n=2)

        assert violation.claim_tag == "claim2"
        assert violation.move.remove == frozenset({(0, 1)})
        assert violation.move.add == frozenset({(1, 3)})
        assert violation.tree.edge_set() == frozenset({(0, 2), (0, 3), (0, 4), (1, 3)})
        assert potential(violation.tree) == violation.after

    def test_net_fixpoint_has_no_violation(self, net_dfs_tree):
        assert find_violation(net_graph(), net_dfs_tree, m=1, n=3) is None

    def test_net_fixpoint_rooted_at_corner(self):
        tree = RootedTree.from_edges(6, [(0, 3), (0, 1), (0, 2), (1, 4), (2, 5)], 0)
        assert find_violation(net_graph(), tree, m=1, n=3) is None

    def test_accepted_tree_is_spanning(self, k5_star):
        graph = complete_graph(5)
        violation = find_violation(graph, k5_star, m=1, n=2)

        assert violation.tree.spans(graph)
        assert len(violation.tree.edges()) == graph.vertex_count - 1


class TestCase1Guards:
    """Guards of the regime without degree-3 branch vertices"""

    def test_claim3_adjacent_leaves(self):
        """Test adjacent leaves of a degree-4 star: the leaf is moved onto its neighbour"""
        graph, tree = host_and_tree(5, [(0, 1), (0, 2), (0, 3), (0, 4)], [(1, 2)])
        assert regime(classify(tree)) == "case1"

        violation = find_violation(graph, tree, m=1, n=3)

        assert_repair(violation, "claim3", (1, 2), remove=[(0, 1)], add=[(1, 2)])
        assert violation.tree.degree(0) == 3

    def test_claim4_pseudoadjacent_leaves(self):
        """Test leaves 2 and 6 both oblique to edge (1, 5)"""
        graph, tree = host_and_tree(
            7,
            [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (5, 6)],
            [(1, 6), (2, 5)],
        )

        violation = find_violation(graph, tree, m=1, n=3)

        assert_repair(violation, "claim4", (2, 6, 1, 5), remove=[(1, 5), (0, 2)], add=[(2, 5), (1, 6)])
        assert violation.tree.spans(graph)

    def test_ab_disjoint_leaf_next_to_sibling(self):
        """Test a leaf child adjacent to a non-leaf sibling takes that sibling over"""
        graph, tree = host_and_tree(6, [(0, 1), (0, 2), (0, 3), (0, 4), (2, 5)], [(1, 2)])

        violation = find_violation(graph, tree, m=1, n=3)

        assert_repair(violation, "AB-disjoint", (0, 1, 2), remove=[(0, 2)], add=[(1, 2)])


class TestCase2Guards:
    """Guards of the regime with a degree-3 branch vertex at the root"""

    def test_claim5_child_without_neighbours(self):
        """Test the siblings of an isolated child are lifted to the parent"""
        graph, tree = host_and_tree(
            7,
            [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (1, 6)],
            [(0, 5), (0, 6)],
        )
        assert regime(classify(tree)) == "case2"

        violation = find_violation(graph, tree, m=1, n=3)

        assert_repair(violation, "claim5", (1, 4), remove=[(1, 5), (1, 6)], add=[(0, 5), (0, 6)])
        assert violation.after.b_count == 1

    def test_claim6_non_adjacent_children(self):
        graph, tree = host_and_tree(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)], [(0, 4), (0, 5)])

        violation = find_violation(graph, tree, m=1, n=3)

        assert_repair(violation, "claim6", (1, 4, 5), remove=[(1, 4)], add=[(0, 4)])

    def test_claim8_pseudoadjacent_pool_vertices(self):
        """Test leaves 2 and 4 pseudoadjacent through edge (0, 1)"""
        graph, tree = host_and_tree(5, [(0, 1), (0, 2), (0, 3), (1, 4)], [(1, 2), (0, 4)])

        violation = find_violation(graph, tree, m=1, n=3)

        assert_repair(violation, "claim8", (2, 4, 0, 1), remove=[(0, 1), (0, 2)], add=[(1, 2), (0, 4)])
        assert classify(violation.tree).branch == frozenset()

    def test_claim9_adjacent_root_neighbours(self):
        """Test root neighbours 1 and 2 adjacent, leaf 4 oblique to (0, 1)"""
        graph, tree = host_and_tree(6, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5)], [(1, 2), (0, 4)])

        violation = find_violation(graph, tree, m=1, n=3)

        assert_repair(violation, "claim9", (1, 2, 4), remove=[(0, 1), (0, 2)], add=[(0, 4), (1, 2)])

    def test_claim10_adjacent_children_with_witness_neighbours(self):
        """Test a degree-4 vertex whose adjacent children see witnesses 2 and 3"""
        graph, tree = host_and_tree(
            9,
            [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (1, 6), (4, 7), (5, 8)],
            [(4, 5), (0, 6), (2, 4), (3, 5)],
        )

        violation = find_violation(graph, tree, m=1, n=3)

        assert_repair(violation, "claim10", (1, 4, 5, 2, 3), remove=[(1, 4)], add=[(2, 4)])
        assert violation.tree.degree(1) == 3

    def test_cde_disjoint_leaf_next_to_sibling(self):
        graph, tree = host_and_tree(
            9,
            [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (1, 7), (5, 6), (7, 8)],
            [(4, 5), (5, 7)],
        )

        violation = find_violation(graph, tree, m=1, n=3)

        assert_repair(violation, "CDE-disjoint", (1, 4, 5), remove=[(1, 5)], add=[(4, 5)])


class TestStalledGuard:
    """A violated guard whose repairs do not help"""

    @pytest.fixture
    def stalled(self, monkeypatch):
        """Every scan reports one violated claim2 context without repairs"""
        monkeypatch.setattr("src.solver.claims._contexts", lambda view, m: iter([("claim2", (0, 1), [])]))

    def test_raises_anomaly_by_default(self, stalled, k5_star):
        with pytest.raises(SolverAnomaly, match="claim2"):
            find_violation(complete_graph(5), k5_star, m=1, n=2)

    def test_exchange_only_when_enabled(self, stalled, k5_star):
        """Test the opt-in fallback answers with a plain exchange"""
        violation = find_violation(complete_graph(5), k5_star, m=1, n=2, exchange_fallback=True)

        assert violation.claim_tag == EXCHANGE_TAG
        assert violation.after < violation.before


class TestExchangeRepair:
    """Tests for the plain edge-exchange fallback"""

    def test_single_exchange_on_k5_star(self, k5_star):
        repair = exchange_repair(complete_graph(5), k5_star)

        assert repair.claim_tag == EXCHANGE_TAG
        assert repair.move.remove == frozenset({(0, 1)})
        assert repair.move.add == frozenset({(1, 2)})
        assert repair.after < repair.before

    def test_no_exchange_improves_a_hamiltonian_path(self):
        """Test a Hamiltonian path of C5 has no improving exchange"""
        tree = RootedTree.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)], 0)
        assert exchange_repair(cycle_graph(5), tree) is None
