"""
Graph-level predicates

- Claw detection (induced K_{1,3}) by neighbourhood scan
- sigma_k: minimum degree sum over independent k-sets, exact branch and bound
- Hypothesis check for the leaf-plus-branch theorem
- Line graph construction and connectivity

Usage:
    from src.graph.properties import check_hypothesis, sigma_k

    report = check_hypothesis(g, m=1, n=2)
    if report.satisfied:
        ...
"""

import functools
from collections import deque
from dataclasses import asdict, dataclass
from itertools import combinations
from typing import Any, Dict, List, Optional, Tuple

from src.graph.graph import Graph
from src.utils.logger import setup_logger

logger = setup_logger(__name__)


@dataclass(frozen=True)
class ClawWitness:
    """An induced K_{1,3}: the center and its three pairwise non-adjacent leaves"""

    center: int
    leaves: Tuple[int, int, int]

    def __str__(self) -> str:
        return f"({self.center};{{{','.join(str(v) for v in self.leaves)}}})"


@functools.total_ordering
@dataclass(frozen=True)
class SigmaValue:
    """sigma_k(G); value None stands for +infinity (alpha(G) < k)"""

    value: Optional[int]

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def at_least(self, threshold: int) -> bool:
        """True when sigma >= threshold (always true for infinity)"""
        return self.value is None or self.value >= threshold

    def at_most(self, bound: int) -> bool:
        return self.value is not None and self.value <= bound

    def __lt__(self, other: "SigmaValue") -> bool:
        if not isinstance(other, SigmaValue):
            return NotImplemented
        if self.value is None:
            return False
        if other.value is None:
            return True
        return self.value < other.value

    def __str__(self) -> str:
        return "inf" if self.value is None else str(self.value)

    def to_json(self) -> Any:
        return "inf" if self.value is None else self.value


INFINITY = SigmaValue(None)


@dataclass(frozen=True)
class HypothesisReport:
    """Outcome of checking the degree-sum hypothesis for given m and n"""

    connected: bool
    claw_free: bool
    claw_witness: Optional[ClawWitness]
    m: int
    n: int
    m_constraint_ok: bool
    sigma_value: SigmaValue
    threshold: int
    satisfied: bool

    def failures(self) -> List[str]:
        """Names of the conditions that do not hold"""
        reasons = []
        if not self.connected:
            reasons.append("not-connected")
        if not self.claw_free:
            reasons.append("not-claw-free")
        if not self.m_constraint_ok:
            reasons.append("m-constraint")
        if not self.sigma_value.at_least(self.threshold):
            reasons.append("sigma-below-threshold")
        return reasons

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["sigma_value"] = self.sigma_value.to_json()
        data["claw_witness"] = (
            None if self.claw_witness is None
            else {"center": self.claw_witness.center, "leaves": list(self.claw_witness.leaves)}
        )
        return data

    def __str__(self) -> str:
        status = "satisfied" if self.satisfied else "not satisfied (" + ", ".join(self.failures()) + ")"
        return (
            f"m={self.m} n={self.n} sigma_{self.m + 1}={self.sigma_value} "
            f"threshold={self.threshold}: {status}"
        )


def ceil_two_thirds(n: int) -> int:
    """ceil(2n/3) in integer arithmetic"""
    return (2 * n + 2) // 3


def claw_witness(graph: Graph) -> Optional[ClawWitness]:
    """
    Find an induced claw

    Scans centers in ascending order and, per center, neighbour triples in
    lexicographic order.

    Args:
        graph: Graph to scan

    Returns:
        The first induced K_{1,3} found, or None if the graph is claw-free
    """
    for center in graph.vertices():
        neighbors = graph.neighbors(center)
        if len(neighbors) < 3:
            continue
        for a, b, c in combinations(neighbors, 3):
            if not graph.has_edge(a, b) and not graph.has_edge(a, c) and not graph.has_edge(b, c):
                return ClawWitness(center=center, leaves=(a, b, c))
    return None


def is_claw_free(graph: Graph) -> bool:
    return claw_witness(graph) is None


def sigma_k(graph: Graph, k: int) -> SigmaValue:
    """
    Minimum degree sum over independent sets of size k

    Depth-first enumeration of independent sets in ascending vertex order.
    A branch is cut when the partial sum plus the smallest degrees still
    available cannot beat the incumbent.

    Args:
        graph: Graph
        k: Set size (k >= 1)

    Returns:
        SigmaValue; infinity when alpha(G) < k
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")

    n = graph.vertex_count
    if n < k:
        return INFINITY

    degrees = graph.degrees()
    masks = [0] * n
    for u, v in graph.edges():
        masks[u] |= 1 << v
        masks[v] |= 1 << u

    # suffix_bounds[v][j]: sum of the j smallest degrees among vertices v..n-1
    suffix_bounds: List[List[int]] = []
    for v in range(n):
        tail = sorted(degrees[v:])
        sums = [0]
        for d in tail[:k]:
            sums.append(sums[-1] + d)
        suffix_bounds.append(sums)

    best: List[Optional[int]] = [None]

    def search(start: int, depth: int, partial: int, forbidden: int) -> None:
        if depth == k:
            if best[0] is None or partial < best[0]:
                best[0] = partial
            return
        need = k - depth
        for v in range(start, n):
            if n - v < need:
                break
            if best[0] is not None and partial + suffix_bounds[v][need] >= best[0]:
                break
            if forbidden >> v & 1:
                continue
            search(v + 1, depth + 1, partial + degrees[v], forbidden | masks[v])

    search(0, 0, 0, 0)
    return SigmaValue(best[0])


def is_connected(graph: Graph) -> bool:
    """
    Check that every vertex is reachable from vertex 0

    Args:
        graph: Graph

    Returns:
        True for connected graphs and for graphs with at most one vertex
    """
    if graph.vertex_count <= 1:
        return True

    seen = [False] * graph.vertex_count
    seen[0] = True
    queue = deque([0])
    reached = 1
    while queue:
        u = queue.popleft()
        for v in graph.neighbors(u):
            if not seen[v]:
                seen[v] = True
                reached += 1
                queue.append(v)
    return reached == graph.vertex_count


def line_graph(graph: Graph) -> Graph:
    """
    Build the line graph L(G)

    Vertex i of the result is the i-th edge of graph.edges() (canonical order);
    two vertices are adjacent when their edges share an endpoint.

    Args:
        graph: Graph with at least one edge

    Returns:
        The line graph
    """
    edges = graph.edges()
    if not edges:
        raise ValueError("line graph of a graph without edges is empty")

    incident: List[List[int]] = [[] for _ in graph.vertices()]
    for index, (u, v) in enumerate(edges):
        incident[u].append(index)
        incident[v].append(index)

    line_edges = set()
    for indices in incident:
        for i, j in combinations(indices, 2):
            line_edges.add((i, j) if i < j else (j, i))

    return Graph(len(edges), sorted(line_edges))


def check_hypothesis(graph: Graph, m: int, n: int) -> HypothesisReport:
    """
    Evaluate the hypothesis of the leaf-plus-branch theorem

    Conditions: G connected and claw-free, m <= ceil(2n/3) and
    sigma_{m+1}(G) >= |G| - n + m - 1.

    Args:
        graph: Graph
        m: Positive integer
        n: Integer >= 2 (target bound on leaves plus branch vertices)

    Returns:
        HypothesisReport (failures are report fields, not errors)
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")

    witness = claw_witness(graph)
    connected = is_connected(graph)
    m_ok = m <= ceil_two_thirds(n)
    sigma = sigma_k(graph, m + 1)
    threshold = graph.vertex_count - n + m - 1
    satisfied = connected and witness is None and m_ok and sigma.at_least(threshold)

    report = HypothesisReport(
        connected=connected,
        claw_free=witness is None,
        claw_witness=witness,
        m=m,
        n=n,
        m_constraint_ok=m_ok,
        sigma_value=sigma,
        threshold=threshold,
        satisfied=satisfied,
    )
    logger.debug(f"Hypothesis check: {report}")
    return report
