"""Brute-force ground truth and the corpus-wide theorem audit"""

from src.oracle.enumeration import enumerate_spanning_trees, laplacian, matrix_tree_count
from src.oracle.bruteforce import (
    OracleReport,
    min_branch_count,
    min_leaf_plus_branch,
    oracle_report,
    sigma_bruteforce,
)
from src.oracle.audit import AuditRecord, AuditReport, audit_graph, theorem_audit

__all__ = [
    "AuditRecord",
    "AuditReport",
    "OracleReport",
    "audit_graph",
    "enumerate_spanning_trees",
    "laplacian",
    "matrix_tree_count",
    "min_branch_count",
    "min_leaf_plus_branch",
    "oracle_report",
    "sigma_bruteforce",
    "theorem_audit",
]
