"""
Exhaustive spanning-tree enumeration

Edges are decided in canonical order: include an edge when it joins two
components of the partial forest (contract), exclude it when the remaining
edges can still connect the forest (delete). Every spanning tree is reached
exactly once. A union-find with rollback keeps each step cheap.

matrix_tree_count gives the exact number of spanning trees from Kirchhoff's
theorem, used to cross-check the enumeration.

Usage:
    from src.oracle.enumeration import enumerate_spanning_trees, matrix_tree_count

    count = enumerate_spanning_trees(g, lambda edges: None)
    assert count == matrix_tree_count(g)
"""

from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from src.exceptions import DisconnectedGraphError, OracleSizeError
from src.graph.graph import Edge, Graph
from src.graph.properties import is_connected
from src.utils.logger import setup_logger
from src.utils.settings import ORACLE_WORK_LIMIT

logger = setup_logger(__name__)

TreeVisitor = Callable[[Tuple[Edge, ...]], None]


class _RollbackUnionFind:
    """Union by size without path compression, so unions can be undone"""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.size = [1] * size
        self.history: List[Optional[Tuple[int, int]]] = []

    def find(self, v: int) -> int:
        while self.parent[v] != v:
            v = self.parent[v]
        return v

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.history.append((ra, rb))
        return True

    def rollback(self) -> None:
        ra, rb = self.history.pop()
        self.parent[rb] = rb
        self.size[ra] -= self.size[rb]


def _can_still_span(uf: _RollbackUnionFind, vertex_count: int, rest: Sequence[Edge]) -> bool:
    """True when the forest plus the rest edges connects every vertex"""
    labels = [uf.find(v) for v in range(vertex_count)]
    merged = {label: label for label in labels}

    def root(x: int) -> int:
        while merged[x] != x:
            merged[x] = merged[merged[x]]
            x = merged[x]
        return x

    components = len(set(labels))
    for a, b in rest:
        ra, rb = root(labels[a]), root(labels[b])
        if ra != rb:
            merged[ra] = rb
            components -= 1
            if components == 1:
                return True
    return components == 1


def enumerate_spanning_trees(
    graph: Graph,
    visit: Optional[TreeVisitor] = None,
    work_limit: int = ORACLE_WORK_LIMIT
) -> int:
    """
    Visit every spanning tree of graph once

    Args:
        graph: Connected graph
        visit: Called with each tree's canonical sorted edge tuple
        work_limit: Maximum number of search nodes

    Returns:
        Number of spanning trees

    Raises:
        DisconnectedGraphError: If graph is not connected
        OracleSizeError: If the search exceeds work_limit nodes
    """
    if not is_connected(graph):
        raise DisconnectedGraphError("spanning trees need a connected graph")

    vertex_count = graph.vertex_count
    edges = graph.edges()
    target = vertex_count - 1
    uf = _RollbackUnionFind(vertex_count)
    chosen: List[Edge] = []
    count = 0
    work = 0

    def search(index: int) -> None:
        nonlocal count, work
        work += 1
        if work > work_limit:
            raise OracleSizeError(
                f"spanning-tree enumeration exceeded {work_limit} work units "
                f"({vertex_count} vertices, {len(edges)} edges)"
            )
        if len(chosen) == target:
            count += 1
            if visit is not None:
                visit(tuple(chosen))
            return
        if index == len(edges):
            return

        a, b = edges[index]
        if uf.union(a, b):
            chosen.append(edges[index])
            search(index + 1)
            chosen.pop()
            uf.rollback()

        if _can_still_span(uf, vertex_count, edges[index + 1:]):
            search(index + 1)

    search(0)
    logger.debug(f"Enumerated {count} spanning trees with {work} work units")
    return count


def _bareiss_determinant(matrix: List[List[int]]) -> int:
    """Fraction-free Gaussian elimination on Python integers"""
    size = len(matrix)
    if size == 0:
        return 1
    a = [row[:] for row in matrix]
    sign = 1
    previous = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, size) if a[i][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // previous
        previous = a[k][k]
    return sign * a[size - 1][size - 1]


def laplacian(graph: Graph) -> np.ndarray:
    """Integer Laplacian matrix D - A"""
    size = graph.vertex_count
    matrix = np.zeros((size, size), dtype=np.int64)
    for u, v in graph.edges():
        matrix[u, v] -= 1
        matrix[v, u] -= 1
    matrix[np.diag_indices(size)] = graph.degrees()
    return matrix


def matrix_tree_count(graph: Graph) -> int:
    """
    Number of spanning trees by Kirchhoff's theorem

    Any cofactor of the Laplacian, evaluated exactly.

    Args:
        graph: Graph with at least one vertex

    Returns:
        Spanning tree count (0 for a disconnected graph)
    """
    if graph.vertex_count == 0:
        raise ValueError("matrix-tree count needs at least one vertex")
    minor = laplacian(graph)[1:, 1:]
    return _bareiss_determinant([[int(x) for x in row] for row in minor.tolist()])
