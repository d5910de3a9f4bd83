"""
JSON documents for solver, oracle and audit output

Every --json document printed by the CLI is built through these models, so
the shape is validated before it is written. SolveResultDocument carries a
top-level "schema" version field.

Usage:
    from src.reporting.schemas import SolveResultDocument

    doc = SolveResultDocument.from_result(result)
    print(doc.dump_json())
"""

from dataclasses import asdict
from typing import Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from src.graph.properties import HypothesisReport
from src.oracle.audit import AuditRecord
from src.oracle.bruteforce import OracleReport
from src.solver.certificate import Certificate
from src.solver.search import SolveResult, SolveStats
from src.trees.rooted_tree import RootedTree, classify

SCHEMA_VERSION = 1

EdgePair = List[int]


class _Document(BaseModel):
    def dump_json(self, indent: Optional[int] = 2) -> str:
        return self.model_dump_json(by_alias=True, indent=indent)


class TreeDocument(_Document):
    """Rooted spanning tree: root, parent array and canonical edge list"""

    root: int = Field(..., ge=0, description="Root vertex")
    parents: List[Optional[int]] = Field(..., description="Parent of each vertex; null for the root")
    edges: List[EdgePair] = Field(..., description="Tree edges in canonical sorted order")
    leaves: List[int] = Field(default_factory=list, description="Vertices of tree degree 1")
    branch: List[int] = Field(default_factory=list, description="Vertices of tree degree at least 3")

    @classmethod
    def from_tree(cls, tree: RootedTree) -> "TreeDocument":
        leaves: List[int] = []
        branch: List[int] = []
        if tree.vertex_count >= 2:
            classification = classify(tree)
            leaves = sorted(classification.leaves)
            branch = sorted(classification.branch)
        return cls(
            root=tree.root,
            parents=list(tree.parents()),
            edges=[list(e) for e in tree.edges()],
            leaves=leaves,
            branch=branch,
        )


class CertificateDocument(_Document):
    """Standalone refutation certificate; also the certificate file format"""

    mode: Literal["case1", "case2"] = Field(..., description="Counting argument used")
    witness: List[int] = Field(..., description="The m+1 witness vertices")
    root: int = Field(..., ge=0, description="Root of the fixpoint tree")
    edges_no_oblique: List[EdgePair] = Field(..., description="Tree edges with no oblique neighbour in the witness")
    count: int = Field(..., ge=0, description="Number of listed edges")
    degree_sum: int = Field(..., ge=0, description="Host-graph degree sum of the witness")
    bound: int = Field(..., description="|G| - n + m - 2")
    fixpoint_tree: Dict[str, Union[int, List[EdgePair]]] = Field(..., description="Root and edges of the fixpoint tree")
    parts: Dict[str, List[EdgePair]] = Field(default_factory=dict, description="Edges grouped by counting step")

    @classmethod
    def from_certificate(cls, certificate: Certificate) -> "CertificateDocument":
        return cls(**certificate.to_dict())

    def to_certificate(self) -> Certificate:
        return Certificate.from_dict(self.model_dump())


class StatsDocument(_Document):
    iterations: int = Field(..., ge=0, description="Accepted moves")
    moves: Dict[str, int] = Field(default_factory=dict, description="Accepted moves per claim tag")

    @classmethod
    def from_stats(cls, stats: SolveStats) -> "StatsDocument":
        return cls(**stats.to_dict())


class HypothesisDocument(_Document):
    connected: bool
    claw_free: bool
    claw_witness: Optional[Dict[str, Union[int, List[int]]]] = None
    m: int
    n: int
    m_constraint_ok: bool
    sigma_value: Union[int, Literal["inf"]] = Field(..., description="sigma_{m+1}(G); \"inf\" when no independent set")
    threshold: int = Field(..., description="|G| - n + m - 1")
    satisfied: bool
    failures: List[str] = Field(default_factory=list)

    @classmethod
    def from_report(cls, report: HypothesisReport) -> "HypothesisDocument":
        return cls(**report.to_dict(), failures=report.failures())


class SolveResultDocument(_Document):
    """Top-level solve / branch / leaves output"""

    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(SCHEMA_VERSION, alias="schema", description="Document schema version")
    status: Literal["tree", "certificate", "anomaly", "error"]
    m: Optional[int] = None
    n: Optional[int] = None
    value: Optional[int] = Field(None, description="Leaves plus branch vertices of the tree")
    tree: Optional[TreeDocument] = None
    certificate: Optional[CertificateDocument] = None
    stats: Optional[StatsDocument] = None
    reason: str = ""

    @classmethod
    def from_result(cls, result: SolveResult) -> "SolveResultDocument":
        return cls(
            status=result.status.value,
            m=result.m,
            n=result.n,
            value=result.value,
            tree=TreeDocument.from_tree(result.tree) if result.tree is not None else None,
            certificate=(
                CertificateDocument.from_certificate(result.certificate) if result.certificate is not None else None
            ),
            stats=StatsDocument.from_stats(result.stats),
            reason=result.reason,
        )

    @classmethod
    def from_error(cls, reason: str) -> "SolveResultDocument":
        return cls(status="error", reason=reason)


class OracleDocument(_Document):
    tree_count: int = Field(..., ge=0, description="Spanning trees found by enumeration")
    kirchhoff_count: int = Field(..., ge=0, description="Spanning trees by the matrix-tree theorem")
    min_leaf_plus_branch: int = Field(..., ge=0)
    leaf_plus_branch_tree: TreeDocument
    min_branch: int = Field(..., ge=0)
    branch_tree: TreeDocument

    @classmethod
    def from_report(cls, report: OracleReport) -> "OracleDocument":
        return cls(
            tree_count=report.tree_count,
            kirchhoff_count=report.kirchhoff_count,
            min_leaf_plus_branch=report.min_leaf_plus_branch,
            leaf_plus_branch_tree=TreeDocument.from_tree(report.leaf_plus_branch_tree),
            min_branch=report.min_branch,
            branch_tree=TreeDocument.from_tree(report.branch_tree),
        )


class AuditRecordDocument(_Document):
    """One audit JSON-lines record"""

    graph_id: str
    m: int
    n: int
    hypothesis: bool
    oracle_min: int
    solver_status: str
    solver_value: Optional[int] = None
    forced: bool = False
    certificate_verified: Optional[bool] = None
    finding: str = ""

    @classmethod
    def from_record(cls, record: AuditRecord) -> "AuditRecordDocument":
        return cls(**asdict(record))
