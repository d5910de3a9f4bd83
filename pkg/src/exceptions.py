"""
Exception hierarchy for the claw-free spanning tree toolkit

Every error raised by the library derives from ClawTreeError so the CLI can map
failures to exit codes without string matching.
"""

from typing import Any, FrozenSet, Optional, Tuple

Edge = Tuple[int, int]


class ClawTreeError(Exception):
    """Base class for all library errors"""


class EdgeListParseError(ClawTreeError, ValueError):
    """Raised when an edge-list document is malformed"""

    def __init__(self, reason: str, line_number: int, message: str):
        self.reason = reason
        self.line_number = line_number
        super().__init__(f"line {line_number}: {reason}: {message}")


class DisconnectedGraphError(ClawTreeError, ValueError):
    """Raised when an operation needs a connected graph"""


class NotClawFreeError(ClawTreeError, ValueError):
    """Raised when the solver is handed a graph with an induced claw"""

    def __init__(self, witness: Any):
        self.witness = witness
        super().__init__(f"graph is not claw-free: {witness}")


class HypothesisNotSatisfiedError(ClawTreeError, ValueError):
    """Raised when the degree-sum hypothesis fails and force is not set"""

    def __init__(self, report: Any):
        self.report = report
        super().__init__(f"hypothesis not satisfied: {report}")


class TreeStructureError(ClawTreeError, ValueError):
    """Raised when an edge set is not a spanning tree"""

    def __init__(self, message: str, edges: Optional[FrozenSet[Edge]] = None):
        self.edges = edges if edges is not None else frozenset()
        if self.edges:
            message = f"{message} (edges: {sorted(self.edges)})"
        super().__init__(message)


class CertificateError(ClawTreeError, RuntimeError):
    """Raised when a refutation certificate cannot be built or fails a check"""

    def __init__(self, reason: str, message: str):
        self.reason = reason
        super().__init__(f"{reason}: {message}")


class SolverAnomaly(ClawTreeError, RuntimeError):
    """Raised when the local search reaches a state the proof rules out"""


class OracleSizeError(ClawTreeError, ValueError):
    """Raised when brute-force work would exceed the configured guard"""
