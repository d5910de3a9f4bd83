"""
Tests for the JSON documents
"""

import json

import pytest
from pydantic import ValidationError

from src.graph.graph import Graph
from src.graph.properties import check_hypothesis
from src.oracle.audit import AuditRecord
from src.oracle.bruteforce import oracle_report
from src.reporting.schemas import (
    AuditRecordDocument,
    CertificateDocument,
    HypothesisDocument,
    OracleDocument,
    SolveResultDocument,
    TreeDocument,
)
from src.solver.certificate import verify_certificate
from src.solver.search import SolverConfig, solve
from src.trees.rooted_tree import RootedTree


@pytest.fixture
def net_certificate(net):
    return solve(net, 1, 3, SolverConfig(force=True)).certificate


def test_tree_document():
    """Test the tree document fields"""
    tree = RootedTree.from_edges(4, [(0, 1), (1, 2), (1, 3)], 0)
    doc = TreeDocument.from_tree(tree)

    assert doc.parents == [None, 0, 1, 1]
    assert doc.leaves == [0, 2, 3]
    assert doc.branch == [1]


def test_single_vertex_tree_document():
    """Test the tree document of a single vertex"""
    doc = TreeDocument.from_tree(RootedTree.from_edges(1, [], 0))
    assert doc.edges == [] and doc.leaves == [] and doc.branch == []


def test_certificate_document_round_trip(net, net_certificate):
    doc = CertificateDocument.from_certificate(net_certificate)
    reloaded = CertificateDocument.model_validate_json(doc.dump_json()).to_certificate()

    assert reloaded == net_certificate
    assert reloaded.fixpoint_tree == net_certificate.fixpoint_tree
    assert verify_certificate(net, reloaded, 1, 3)


def test_certificate_document_rejects_unknown_mode(net_certificate):
    """Test an unknown certificate mode fails validation"""
    data = CertificateDocument.from_certificate(net_certificate).model_dump()
    data["mode"] = "case3"

    with pytest.raises(ValidationError):
        CertificateDocument(**data)


def test_solve_result_document_uses_schema_alias(c6):
    """Test the solve document serializes with its schema alias"""
    payload = json.loads(SolveResultDocument.from_result(solve(c6, 1, 2)).dump_json())

    assert payload["schema"] == 1
    assert "schema_version" not in payload
    assert payload["status"] == "tree"
    assert payload["certificate"] is None
    assert payload["stats"]["iterations"] == 0


def test_error_document():
    """Test the error document"""
    payload = json.loads(SolveResultDocument.from_error("parse: line 2").dump_json())

    assert payload["status"] == "error"
    assert payload["tree"] is None
    assert payload["reason"] == "parse: line 2"


def test_hypothesis_document_infinite_sigma():
    """Test a triangle reports sigma as inf"""
    graph = Graph(3, [(0, 1), (1, 2), (0, 2)])
    doc = HypothesisDocument.from_report(check_hypothesis(graph, 1, 2))

    assert doc.sigma_value == "inf"
    assert doc.satisfied
    assert doc.failures == []


def test_hypothesis_document_claw(claw):
    doc = HypothesisDocument.from_report(check_hypothesis(claw, 1, 2))

    assert doc.claw_witness == {"center": 0, "leaves": [1, 2, 3]}
    assert "not-claw-free" in doc.failures


def test_oracle_document(four_net):
    """Test the oracle document for the four-net"""
    doc = OracleDocument.from_report(oracle_report(four_net))

    assert doc.tree_count == doc.kirchhoff_count == 16
    assert doc.min_leaf_plus_branch == 5
    assert len(doc.leaf_plus_branch_tree.leaves) + len(doc.leaf_plus_branch_tree.branch) == 5


def test_audit_record_document():
    """Test one audit record document"""
    record = AuditRecord("named:name=C5", 1, 2, True, 2, "tree", 2)
    doc = AuditRecordDocument.from_record(record)

    assert doc.model_dump() == {
        "graph_id": "named:name=C5", "m": 1, "n": 2, "hypothesis": True, "oracle_min": 2,
        "solver_status": "tree", "solver_value": 2, "forced": False,
        "certificate_verified": None, "finding": "",
    }
