"""
Immutable Simple Graph

Vertices are dense ids 0..N-1. Adjacency is stored both as sorted tuples
(deterministic iteration) and frozensets (constant-time membership).

Usage:
    from src.graph.graph import Graph

    g = Graph(3, [(0, 1), (1, 2)])
    g.degree(1)  # 2
"""

from typing import FrozenSet, Iterable, List, Sequence, Tuple

Edge = Tuple[int, int]


def canonical_edge(u: int, v: int) -> Edge:
    """Return the edge {u, v} as a pair with the smaller id first"""
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph over vertex ids 0..N-1"""

    __slots__ = ("_vertex_count", "_neighbors", "_neighbor_sets", "_edges")

    def __init__(self, vertex_count: int, edges: Iterable[Sequence[int]] = ()):
        """
        Build a graph and validate it

        Args:
            vertex_count: Number of vertices N
            edges: Pairs (u, v) with 0 <= u, v < N

        Raises:
            ValueError: On a self-loop, duplicate edge or out-of-range id
        """
        if vertex_count < 0:
            raise ValueError(f"vertex_count must be non-negative, got {vertex_count}")

        adjacency: List[set] = [set() for _ in range(vertex_count)]
        edge_list: List[Edge] = []

        for pair in edges:
            u, v = int(pair[0]), int(pair[1])
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range for {vertex_count} vertices")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if v in adjacency[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            adjacency[u].add(v)
            adjacency[v].add(u)
            edge_list.append(canonical_edge(u, v))

        self._vertex_count = vertex_count
        self._neighbors: Tuple[Tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adjacency)
        self._neighbor_sets: Tuple[FrozenSet[int], ...] = tuple(frozenset(a) for a in adjacency)
        self._edges: Tuple[Edge, ...] = tuple(sorted(edge_list))

    @property
    def vertex_count(self) -> int:
        """Number of vertices |G|"""
        return self._vertex_count

    @property
    def edge_count(self) -> int:
        """Number of edges |E(G)|"""
        return len(self._edges)

    def vertices(self) -> range:
        return range(self._vertex_count)

    def edges(self) -> Tuple[Edge, ...]:
        """All edges in canonical sorted order"""
        return self._edges

    def neighbors(self, v: int) -> Tuple[int, ...]:
        """Sorted neighbors N_G(v)"""
        return self._neighbors[v]

    def neighbor_set(self, v: int) -> FrozenSet[int]:
        return self._neighbor_sets[v]

    def degree(self, v: int) -> int:
        return len(self._neighbors[v])

    def degrees(self) -> Tuple[int, ...]:
        return tuple(len(n) for n in self._neighbors)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._neighbor_sets[u]

    def is_independent(self, vertices: Iterable[int]) -> bool:
        """Check that no two of the given vertices are adjacent"""
        chosen = list(vertices)
        for i, u in enumerate(chosen):
            for v in chosen[i + 1:]:
                if u == v or self.has_edge(u, v):
                    return False
        return True

    def to_networkx(self):
        """
        Convert to a networkx graph (for cross-checks and plotting)

        Returns:
            networkx.Graph with the same vertex ids and edges
        """
        import networkx as nx

        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(self.vertices())
        nx_graph.add_edges_from(self._edges)
        return nx_graph

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertex_count == other._vertex_count and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._vertex_count, self._edges))

    def __repr__(self) -> str:
        return f"<Graph(vertices={self._vertex_count}, edges={len(self._edges)})>"
