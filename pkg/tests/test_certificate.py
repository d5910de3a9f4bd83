"""
Tests for refutation certificates
"""

import dataclasses

import pytest

from src.exceptions import CertificateError
from src.graph.properties import sigma_k
from src.instances.generators import cycle_graph, four_net_graph, net_graph
from src.solver.certificate import (
    Certificate,
    CertificateMode,
    build_certificate,
    certificate_bound,
    verify_certificate,
)
from src.trees.rooted_tree import RootedTree


@pytest.fixture
def net_dfs_tree():
    return RootedTree.from_edges(6, [(0, 1), (1, 2), (2, 5), (1, 4), (0, 3)], 1)


@pytest.fixture
def net_certificate(net_dfs_tree):
    return build_certificate(net_graph(), net_dfs_tree, m=1, n=3)


@pytest.fixture
def four_net_tree():
    """K4 part spanned by a star at 1, pendants attached"""
    edges = [(0, 1), (1, 2), (1, 3), (0, 4), (1, 5), (2, 6), (3, 7)]
    return RootedTree.from_edges(8, edges, 1)


def test_certificate_bound():
    """Test the certificate bound N - n + m - 2"""
    assert certificate_bound(6, 1, 3) == 2
    assert certificate_bound(8, 1, 4) == 3


class TestBuildCertificate:
    """Tests for reading certificates off fixpoint trees"""

    def test_net_case2(self, net_certificate):
        """Test the net fixpoint yields a degree-3 counting certificate"""
        cert = net_certificate

        assert cert.mode is CertificateMode.CASE2
        assert cert.witness == (3, 4)
        assert cert.root == 1
        assert cert.parts["C"] == ((0, 1), (1, 2))
        assert cert.parts["D"] == ()
        assert cert.parts["E"] == ((2, 5),)
        assert cert.count == 3
        assert cert.degree_sum == 2
        assert cert.bound == 2

    def test_net_rooted_at_corner(self):
        """Test the net certificate when the tree is rooted at a triangle corner"""
        tree = RootedTree.from_edges(6, [(0, 3), (0, 1), (0, 2), (1, 4), (2, 5)], 0)
        cert = build_certificate(net_graph(), tree, m=1, n=3)

        assert cert.parts["C"] == ((0, 1), (0, 2))
        assert cert.parts["E"] == ((2, 5),)
        assert cert.degree_sum <= cert.bound

    def test_four_net_case1(self, four_net_tree):
        """Test the four-net tree yields a certificate without degree-3 branch vertices"""
        cert = build_certificate(four_net_graph(), four_net_tree, m=1, n=4)

        assert cert.mode is CertificateMode.CASE1
        assert cert.witness == (4, 5)
        assert cert.parts["A"] == ((2, 6), (3, 7))
        assert cert.parts["B"] == ((0, 1), (1, 2))
        assert cert.count == 4
        assert cert.degree_sum == 2
        assert cert.bound == 3

    def test_tree_within_bound_is_rejected(self):
        path = RootedTree.from_edges(6, [(i, i + 1) for i in range(5)], 0)

        with pytest.raises(CertificateError) as excinfo:
            build_certificate(cycle_graph(6), path, m=1, n=2)
        assert excinfo.value.reason == "precondition"

    def test_sound_against_exact_sigma(self, net_certificate):
        """Test the certified bound is at least the exact sigma value"""
        assert sigma_k(net_graph(), 2).at_most(net_certificate.bound)


class TestVerifyCertificate:
    """Tests for the standalone verifier"""

    def test_accepts_built_certificate(self, net_certificate):
        """Test the verifier accepts what the builder produced"""
        result = verify_certificate(net_graph(), net_certificate, 1, 3)

        assert result
        assert result.reason == "ok"

    @pytest.mark.parametrize("changes,reason", [
        ({"witness": (0, 3)}, "not-independent"),
        ({"witness": (3, 9)}, "vertex-range"),
        ({"bound": 3}, "bound-mismatch"),
        ({"count": 2}, "count-mismatch"),
        ({"degree_sum": 1}, "degree-sum-mismatch"),
        ({"edges_no_oblique": ((0, 1), (0, 1), (2, 5))}, "duplicate-edge"),
        ({"edges_no_oblique": ((0, 2), (1, 2), (2, 5))}, "not-tree-edge"),
        ({"edges_no_oblique": ((0, 3), (1, 2), (2, 5))}, "oblique-neighbor"),
        ({"root": 0}, "tree-mismatch"),
    ])
    def test_rejects_tampering(self, net_certificate, changes, reason):
        """Test each tampered field is rejected with its reason code"""
        tampered = dataclasses.replace(net_certificate, **changes)
        result = verify_certificate(net_graph(), tampered, 1, 3)

        assert not result
        assert result.reason == reason

    def test_rejects_wrong_m(self, net_certificate):
        """Test a certificate checked against another m"""
        assert verify_certificate(net_graph(), net_certificate, 2, 3).reason == "witness-size"

    def test_rejects_other_graph(self, net_certificate):
        assert verify_certificate(four_net_graph(), net_certificate, 1, 3).reason == "tree-mismatch"

    def test_rejects_too_few_edges(self, net_certificate):
        """Test a certificate whose tree misses edges"""
        short = dataclasses.replace(net_certificate, edges_no_oblique=((0, 1), (1, 2)), count=2)
        assert verify_certificate(net_graph(), short, 1, 3).reason == "count-too-small"


class TestSerialization:
    """Tests for the certificate dictionary form"""

    def test_dict_round_trip(self, net_certificate):
        """Test to_dict and from_dict preserve every field"""
        data = net_certificate.to_dict()
        restored = Certificate.from_dict(data)

        assert data["mode"] == "case2"
        assert data["fixpoint_tree"]["root"] == 1
        assert restored == net_certificate
        assert restored.fixpoint_tree.edge_set() == net_certificate.fixpoint_tree.edge_set()
        assert verify_certificate(net_graph(), restored, 1, 3)

    def test_malformed(self):
        """Test malformed certificate dictionaries raise CertificateError"""
        with pytest.raises(CertificateError) as excinfo:
            Certificate.from_dict({"mode": "case2"})
        assert excinfo.value.reason == "malformed"
