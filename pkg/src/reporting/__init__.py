"""Validated JSON documents for CLI output and certificate files"""

from src.reporting.schemas import (
    SCHEMA_VERSION,
    AuditRecordDocument,
    CertificateDocument,
    HypothesisDocument,
    OracleDocument,
    SolveResultDocument,
    StatsDocument,
    TreeDocument,
)

__all__ = [
    "SCHEMA_VERSION",
    "AuditRecordDocument",
    "CertificateDocument",
    "HypothesisDocument",
    "OracleDocument",
    "SolveResultDocument",
    "StatsDocument",
    "TreeDocument",
]
