"""
Local search for spanning trees with few leaves and branch vertices

solve starts from a depth-first spanning tree and repeatedly applies claim
repairs, each strictly decreasing the tree's PotentialKey, until the tree
has at most n leaves plus branch vertices or no guard is violated. In the
second case the counting argument yields a refutation certificate.

Usage:
    from src.solver.search import solve, SolverConfig

    result = solve(g, m=1, n=3, config=SolverConfig(force=True))
    print(result.status, result.value)
"""

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from src.exceptions import (
    CertificateError,
    DisconnectedGraphError,
    HypothesisNotSatisfiedError,
    NotClawFreeError,
    SolverAnomaly,
    TreeStructureError,
)
from src.graph.graph import Graph
from src.graph.properties import HypothesisReport, check_hypothesis, claw_witness, is_connected
from src.solver.certificate import Certificate, build_certificate
from src.solver.claims import exchange_repair, find_violation
from src.trees.moves import apply_root_policy
from src.trees.potential import PotentialKey, potential
from src.trees.rooted_tree import RootedTree, classify, dfs_spanning_tree
from src.utils.logger import setup_logger
from src.utils.settings import EXCHANGE_FALLBACK

logger = setup_logger(__name__)


class SolveStatus(str, Enum):
    TREE = "tree"
    CERTIFICATE = "certificate"
    ANOMALY = "anomaly"


@dataclass
class SolverConfig:
    """
    Per-run solver options

    Attributes:
        force: Search even when the hypothesis check fails
        max_iterations: Move cap (default |G|^3)
        root: Root of the initial depth-first tree
        initial_tree: Start from this spanning tree instead
        exchange_fallback: Try plain edge exchanges when claim repairs stall
            (opt-in; off unless CLAWTREE_EXCHANGE_FALLBACK=true)
    """

    force: bool = False
    max_iterations: Optional[int] = None
    root: int = 0
    initial_tree: Optional[RootedTree] = None
    exchange_fallback: bool = EXCHANGE_FALLBACK


@dataclass
class SolveStats:
    """Iteration count, accepted moves per claim and the potential trace"""

    iterations: int = 0
    moves: Counter = field(default_factory=Counter)
    potentials: List[PotentialKey] = field(default_factory=list)

    def record(self, claim_tag: str) -> None:
        self.iterations += 1
        self.moves[claim_tag] += 1

    def to_dict(self) -> Dict[str, Any]:
        return {"iterations": self.iterations, "moves": dict(sorted(self.moves.items()))}


@dataclass
class SolveResult:
    """Outcome of one solve run"""

    status: SolveStatus
    m: int
    n: int
    tree: Optional[RootedTree] = None
    certificate: Optional[Certificate] = None
    stats: SolveStats = field(default_factory=SolveStats)
    reason: str = ""
    hypothesis: Optional[HypothesisReport] = None

    @property
    def value(self) -> Optional[int]:
        """Leaves plus branch vertices of the returned tree"""
        if self.tree is None:
            return None
        if self.tree.vertex_count < 2:
            return 0
        return classify(self.tree).leaf_plus_branch

    @property
    def branch_count(self) -> Optional[int]:
        if self.tree is None:
            return None
        if self.tree.vertex_count < 2:
            return 0
        return len(classify(self.tree).branch)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "status": self.status.value,
            "m": self.m,
            "n": self.n,
            "value": self.value,
            "reason": self.reason,
            "stats": self.stats.to_dict(),
        }
        if self.certificate is not None:
            data["certificate"] = self.certificate.to_dict()
        return data


def _validate_arguments(graph: Graph, m: int, n: int) -> None:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if graph.vertex_count == 0:
        raise ValueError("graph has no vertices")
    if not is_connected(graph):
        raise DisconnectedGraphError(f"graph with {graph.vertex_count} vertices is not connected")
    witness = claw_witness(graph)
    if witness is not None:
        raise NotClawFreeError(witness)


def _initial_tree(graph: Graph, config: SolverConfig) -> RootedTree:
    if config.initial_tree is None:
        return dfs_spanning_tree(graph, config.root)
    if not config.initial_tree.spans(graph):
        raise TreeStructureError("initial tree is not a spanning tree of the graph", config.initial_tree.edge_set())
    return config.initial_tree


def solve(graph: Graph, m: int, n: int, config: Optional[SolverConfig] = None) -> SolveResult:
    """
    Find a spanning tree with at most n leaves plus branch vertices

    Args:
        graph: Connected claw-free graph
        m: Positive integer, the witness size is m+1
        n: Target bound, at least 2
        config: Solver options

    Returns:
        SolveResult with status tree, certificate or anomaly

    Raises:
        ValueError: If m or n is out of range
        DisconnectedGraphError: If graph is not connected
        NotClawFreeError: If graph contains an induced claw
        HypothesisNotSatisfiedError: If the hypothesis fails and force is unset
    """
    config = config or SolverConfig()
    _validate_arguments(graph, m, n)

    report = check_hypothesis(graph, m, n)
    if not report.satisfied and not config.force:
        raise HypothesisNotSatisfiedError(report)

    stats = SolveStats()
    vertex_count = graph.vertex_count
    if vertex_count <= 2:
        tree = dfs_spanning_tree(graph, 0)
        return SolveResult(SolveStatus.TREE, m, n, tree=tree, stats=stats, hypothesis=report)

    tree = _initial_tree(graph, config)
    tree = apply_root_policy(tree, preferred=tree.root)
    cap = config.max_iterations if config.max_iterations is not None else vertex_count ** 3

    def anomaly(reason: str) -> SolveResult:
        logger.error(f"Anomaly after {stats.iterations} moves (m={m}, n={n}): {reason}")
        return SolveResult(SolveStatus.ANOMALY, m, n, tree=tree, stats=stats, reason=reason, hypothesis=report)

    while True:
        classification = classify(tree)
        stats.potentials.append(potential(tree, classification))
        if classification.leaf_plus_branch <= n:
            logger.debug(f"Tree with {classification.leaf_plus_branch} <= {n} leaves plus branch vertices "
                        f"after {stats.iterations} moves")
            return SolveResult(SolveStatus.TREE, m, n, tree=tree, stats=stats, hypothesis=report)

        if stats.iterations >= cap:
            return anomaly(f"iteration cap {cap} reached")

        try:
            violation = find_violation(graph, tree, m, n, config.exchange_fallback)
        except SolverAnomaly as e:
            return anomaly(str(e))

        if violation is None:
            try:
                certificate = build_certificate(graph, tree, m, n)
            except CertificateError as e:
                if not config.exchange_fallback:
                    return anomaly(f"certificate construction failed: {e}")
                violation = exchange_repair(graph, tree)
                if violation is None:
                    return anomaly(f"certificate construction failed and no exchange helps: {e}")
                logger.warning(f"Certificate construction failed ({e.reason}); using exchange {violation.move}")
            else:
                logger.debug(f"Certificate ({certificate.mode.value}) after {stats.iterations} moves: "
                            f"degree sum {certificate.degree_sum} <= {certificate.bound}")
                return SolveResult(
                    SolveStatus.CERTIFICATE, m, n, tree=tree, certificate=certificate, stats=stats, hypothesis=report
                )

        stats.record(violation.claim_tag)
        tree = violation.tree


def branch_mode_parameters(k: int, m: Optional[int] = None) -> Tuple[int, int]:
    """
    (m, n) for the few-branch-vertices mode

    n = 2k+3 and k+3 <= m <= k + (k-1)/3 + 3; m defaults to k+3.

    Raises:
        ValueError: If k < 1 or m is outside its range
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    low, high = k + 3, k + (k - 1) // 3 + 3
    if m is None:
        m = low
    if not low <= m <= high:
        raise ValueError(f"m must lie in [{low}, {high}] for k={k}, got {m}")
    return m, 2 * k + 3


def solve_branch_mode(
    graph: Graph,
    k: int,
    m: Optional[int] = None,
    config: Optional[SolverConfig] = None
) -> SolveResult:
    """
    Spanning tree with at most k branch vertices

    Runs solve with n = 2k+3; a tree with at most 2k+3 leaves plus branch
    vertices has at most k branch vertices because |L| >= |B| + 2.

    Args:
        graph: Connected claw-free graph
        k: Branch vertex budget, at least 1
        m: Witness size minus one (default k+3)
        config: Solver options

    Returns:
        SolveResult; a tree with more than k branch vertices is an anomaly
    """
    m, n = branch_mode_parameters(k, m)
    result = solve(graph, m, n, config)
    if result.status is SolveStatus.TREE and result.branch_count > k:
        result.status = SolveStatus.ANOMALY
        result.reason = f"tree has {result.branch_count} > {k} branch vertices"
        logger.error(result.reason)
    return result


def solve_leaf_mode(graph: Graph, k: int, config: Optional[SolverConfig] = None) -> SolveResult:
    """
    Spanning tree with at most k+1 leaves plus branch vertices (m = 1, n = k+1)

    Raises:
        ValueError: If k < 1
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return solve(graph, 1, k + 1, config)
