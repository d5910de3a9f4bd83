"""Claim-driven local search, refutation certificates and theorem modes"""

from src.solver.claims import Violation, exchange_repair, find_violation
from src.solver.certificate import (
    Certificate,
    CertificateMode,
    VerificationResult,
    build_certificate,
    verify_certificate,
)
from src.solver.search import (
    SolveResult,
    SolveStats,
    SolveStatus,
    SolverConfig,
    solve,
    solve_branch_mode,
    solve_leaf_mode,
)

__all__ = [
    "Certificate",
    "CertificateMode",
    "SolveResult",
    "SolveStats",
    "SolveStatus",
    "SolverConfig",
    "VerificationResult",
    "Violation",
    "build_certificate",
    "exchange_repair",
    "find_violation",
    "solve",
    "solve_branch_mode",
    "solve_leaf_mode",
    "verify_certificate",
]
