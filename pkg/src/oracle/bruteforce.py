"""
Brute-force ground truth

Exact minima over all spanning trees and an unpruned sigma_k, used to check
the solver and the pruned sigma_k on small graphs.

Usage:
    from src.oracle.bruteforce import oracle_report

    report = oracle_report(g)
    print(report.min_leaf_plus_branch, report.min_branch)
"""

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Any, Dict, List, Optional, Sequence, Tuple

from src.exceptions import OracleSizeError
from src.graph.graph import Edge, Graph
from src.graph.properties import INFINITY, SigmaValue
from src.oracle.enumeration import enumerate_spanning_trees, matrix_tree_count
from src.trees.rooted_tree import RootedTree
from src.utils.logger import setup_logger
from src.utils.settings import ORACLE_WORK_LIMIT

logger = setup_logger(__name__)


@dataclass(frozen=True)
class OracleReport:
    """Exact minima over all spanning trees, each with a witness tree"""

    tree_count: int
    kirchhoff_count: int
    min_leaf_plus_branch: int
    leaf_plus_branch_tree: RootedTree
    min_branch: int
    branch_tree: RootedTree

    @property
    def counts_agree(self) -> bool:
        return self.tree_count == self.kirchhoff_count

    def to_dict(self) -> Dict[str, Any]:
        return {
            "tree_count": self.tree_count,
            "kirchhoff_count": self.kirchhoff_count,
            "min_leaf_plus_branch": self.min_leaf_plus_branch,
            "leaf_plus_branch_tree": [list(e) for e in self.leaf_plus_branch_tree.edges()],
            "min_branch": self.min_branch,
            "branch_tree": [list(e) for e in self.branch_tree.edges()],
        }


def leaf_and_branch_counts(vertex_count: int, edges: Sequence[Edge]) -> Tuple[int, int]:
    """(|L|, |B|) of a tree given by its edges"""
    degree = [0] * vertex_count
    for a, b in edges:
        degree[a] += 1
        degree[b] += 1
    return sum(1 for d in degree if d == 1), sum(1 for d in degree if d >= 3)


def oracle_report(graph: Graph, work_limit: int = ORACLE_WORK_LIMIT) -> OracleReport:
    """
    One enumeration pass computing the tree count and both minima

    Ties keep the first tree in enumeration order.

    Args:
        graph: Connected graph
        work_limit: Enumeration guard

    Returns:
        OracleReport

    Raises:
        DisconnectedGraphError: If graph is not connected
        OracleSizeError: If enumeration exceeds work_limit
    """
    vertex_count = graph.vertex_count
    best_lb: List[Optional[Tuple[int, Tuple[Edge, ...]]]] = [None]
    best_b: List[Optional[Tuple[int, Tuple[Edge, ...]]]] = [None]

    def visit(edges: Tuple[Edge, ...]) -> None:
        if vertex_count < 2:
            leaves, branch = 0, 0
        else:
            leaves, branch = leaf_and_branch_counts(vertex_count, edges)
        if best_lb[0] is None or leaves + branch < best_lb[0][0]:
            best_lb[0] = (leaves + branch, edges)
        if best_b[0] is None or branch < best_b[0][0]:
            best_b[0] = (branch, edges)

    count = enumerate_spanning_trees(graph, visit, work_limit)
    lb_value, lb_edges = best_lb[0]
    b_value, b_edges = best_b[0]

    report = OracleReport(
        tree_count=count,
        kirchhoff_count=matrix_tree_count(graph),
        min_leaf_plus_branch=lb_value,
        leaf_plus_branch_tree=RootedTree.from_edges(vertex_count, lb_edges, 0),
        min_branch=b_value,
        branch_tree=RootedTree.from_edges(vertex_count, b_edges, 0),
    )
    if not report.counts_agree:
        logger.error(f"Enumeration found {count} trees but the matrix-tree count is {report.kirchhoff_count}")
    return report


def min_leaf_plus_branch(graph: Graph, work_limit: int = ORACLE_WORK_LIMIT) -> Tuple[int, RootedTree]:
    """Exact minimum of |L(T)| + |B(T)| over spanning trees, with a witness"""
    report = oracle_report(graph, work_limit)
    return report.min_leaf_plus_branch, report.leaf_plus_branch_tree


def min_branch_count(graph: Graph, work_limit: int = ORACLE_WORK_LIMIT) -> Tuple[int, RootedTree]:
    """Exact minimum of |B(T)| over spanning trees, with a witness"""
    report = oracle_report(graph, work_limit)
    return report.min_branch, report.branch_tree


def sigma_bruteforce(graph: Graph, k: int, work_limit: int = ORACLE_WORK_LIMIT) -> SigmaValue:
    """
    sigma_k by plain enumeration of every k-subset

    Args:
        graph: Graph
        k: Subset size, at least 1
        work_limit: Maximum number of subsets

    Returns:
        SigmaValue (infinity when no independent k-set exists)

    Raises:
        ValueError: If k < 1
        OracleSizeError: If C(|G|, k) exceeds work_limit
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    subsets = comb(graph.vertex_count, k)
    if subsets > work_limit:
        raise OracleSizeError(f"C({graph.vertex_count}, {k}) = {subsets} subsets exceeds {work_limit}")

    best: Optional[int] = None
    for subset in combinations(graph.vertices(), k):
        if graph.is_independent(subset):
            total = sum(graph.degree(v) for v in subset)
            if best is None or total < best:
                best = total
    return INFINITY if best is None else SigmaValue(best)
