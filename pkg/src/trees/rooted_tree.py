"""
Rooted Spanning Trees

RootedTree stores parent links, sorted children, depths and an Euler-tour
interval per vertex, so ancestor tests are O(1) and path queries are linear.

Notation used in the method names:
- path_between(u, v): the unique tree path P_T[u, v]
- toward(u, v): u's tree neighbour on P_T[u, v] (written u_v)
- near_endpoint(e, v): endpoint of e in the direction of v (written e_v)
- far_endpoint(e, v): endpoint of e farthest from v (written g(e, v))

Usage:
    from src.trees.rooted_tree import dfs_spanning_tree, classify

    tree = dfs_spanning_tree(g, root=0)
    classification = classify(tree)
"""

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from src.exceptions import DisconnectedGraphError, TreeStructureError
from src.graph.graph import Edge, Graph, canonical_edge


class RootedTree:
    """Spanning tree with a designated root"""

    __slots__ = ("_root", "_parent", "_children", "_depth", "_tin", "_tout", "_edges", "_edge_set")

    def __init__(self, root: int, parent: Sequence[Optional[int]]):
        """
        Build a rooted tree from a parent array

        Args:
            root: Root vertex (its parent entry must be None)
            parent: parent[v] for every vertex, None only at the root

        Raises:
            TreeStructureError: If the links are not a spanning tree rooted at root
        """
        vertex_count = len(parent)
        if not 0 <= root < vertex_count:
            raise TreeStructureError(f"root {root} out of range for {vertex_count} vertices")
        if parent[root] is not None:
            raise TreeStructureError(f"root {root} has a parent")

        children: List[List[int]] = [[] for _ in range(vertex_count)]
        for v, p in enumerate(parent):
            if v == root:
                continue
            if p is None:
                raise TreeStructureError(f"vertex {v} has no parent but is not the root")
            if not 0 <= p < vertex_count or p == v:
                raise TreeStructureError(f"vertex {v} has invalid parent {p}")
            children[p].append(v)

        depth = [-1] * vertex_count
        tin = [0] * vertex_count
        tout = [0] * vertex_count
        depth[root] = 0
        clock = 0
        stack: List[Tuple[int, int]] = [(root, 0)]
        tin[root] = clock
        clock += 1
        while stack:
            v, index = stack[-1]
            kids = children[v]
            if index < len(kids):
                stack[-1] = (v, index + 1)
                child = kids[index]
                depth[child] = depth[v] + 1
                tin[child] = clock
                clock += 1
                stack.append((child, 0))
            else:
                tout[v] = clock
                stack.pop()

        if clock != vertex_count:
            unreached = [v for v in range(vertex_count) if depth[v] == -1]
            raise TreeStructureError(f"parent links do not reach vertices {unreached} from root {root}")

        self._root = root
        self._parent: Tuple[Optional[int], ...] = tuple(parent)
        self._children: Tuple[Tuple[int, ...], ...] = tuple(tuple(sorted(c)) for c in children)
        self._depth: Tuple[int, ...] = tuple(depth)
        self._tin: Tuple[int, ...] = tuple(tin)
        self._tout: Tuple[int, ...] = tuple(tout)
        self._edges: Tuple[Edge, ...] = tuple(sorted(
            canonical_edge(v, p) for v, p in enumerate(parent) if p is not None
        ))
        self._edge_set: FrozenSet[Edge] = frozenset(self._edges)

    # ==================== Construction ====================

    @classmethod
    def from_edges(
        cls,
        vertex_count: int,
        edges: Iterable[Sequence[int]],
        root: int = 0,
        graph: Optional[Graph] = None
    ) -> "RootedTree":
        """
        Build a rooted tree from an undirected edge set

        Args:
            vertex_count: Number of vertices
            edges: Tree edges
            root: Root vertex
            graph: Optional host graph; every edge must belong to it

        Raises:
            TreeStructureError: If the edges do not form a spanning tree
        """
        edge_set = frozenset(canonical_edge(int(e[0]), int(e[1])) for e in edges)
        if vertex_count == 0:
            raise TreeStructureError("a spanning tree needs at least one vertex")
        if not 0 <= root < vertex_count:
            raise TreeStructureError(f"root {root} out of range for {vertex_count} vertices")
        if len(edge_set) != vertex_count - 1:
            raise TreeStructureError(
                f"a spanning tree on {vertex_count} vertices has {vertex_count - 1} edges, got {len(edge_set)}",
                edge_set,
            )
        if graph is not None:
            foreign = frozenset(e for e in edge_set if not graph.has_edge(*e))
            if foreign:
                raise TreeStructureError("edges are not in the host graph", foreign)

        adjacency: List[List[int]] = [[] for _ in range(vertex_count)]
        for u, v in edge_set:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count) or u == v:
                raise TreeStructureError(f"invalid edge ({u}, {v})", edge_set)
            adjacency[u].append(v)
            adjacency[v].append(u)

        parent: List[Optional[int]] = [None] * vertex_count
        seen = [False] * vertex_count
        seen[root] = True
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    parent[v] = u
                    queue.append(v)

        if not all(seen):
            # n-1 edges and disconnected means there is also a cycle
            raise TreeStructureError("edge set is disconnected or contains a cycle", edge_set)
        return cls(root, parent)

    def rerooted(self, root: int) -> "RootedTree":
        """Same edge set, different root"""
        if root == self._root:
            return self
        return RootedTree.from_edges(self.vertex_count, self._edges, root)

    # ==================== Basic accessors ====================

    @property
    def root(self) -> int:
        return self._root

    @property
    def vertex_count(self) -> int:
        return len(self._parent)

    def parent(self, v: int) -> Optional[int]:
        return self._parent[v]

    def parents(self) -> Tuple[Optional[int], ...]:
        return self._parent

    def children(self, v: int) -> Tuple[int, ...]:
        return self._children[v]

    def depth(self, v: int) -> int:
        """Tree distance from the root"""
        return self._depth[v]

    def degree(self, v: int) -> int:
        return len(self._children[v]) + (0 if v == self._root else 1)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        """Sorted tree neighbours N_T(v)"""
        p = self._parent[v]
        if p is None:
            return self._children[v]
        return tuple(sorted(self._children[v] + (p,)))

    def edges(self) -> Tuple[Edge, ...]:
        """Tree edges in canonical sorted order"""
        return self._edges

    def edge_set(self) -> FrozenSet[Edge]:
        return self._edge_set

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self._edge_set

    def spans(self, graph: Graph) -> bool:
        """True when this tree is a spanning tree of graph"""
        return self.vertex_count == graph.vertex_count and all(graph.has_edge(u, v) for u, v in self._edges)

    # ==================== Paths ====================

    def is_ancestor(self, a: int, v: int) -> bool:
        """True when a lies on the path from v to the root (a == v included)"""
        return self._tin[a] <= self._tin[v] < self._tout[a]

    def lca(self, u: int, v: int) -> int:
        while not self.is_ancestor(u, v):
            u = self._parent[u]
        return u

    def distance(self, u: int, v: int) -> int:
        return self._depth[u] + self._depth[v] - 2 * self._depth[self.lca(u, v)]

    def median(self, a: int, b: int, c: int) -> int:
        """The unique vertex common to P_T[a, b], P_T[b, c] and P_T[c, a]"""
        return max((self.lca(a, b), self.lca(b, c), self.lca(a, c)), key=lambda x: self._depth[x])

    def on_path(self, z: int, u: int, v: int) -> bool:
        """True when z lies on P_T[u, v]"""
        return self.distance(u, z) + self.distance(z, v) == self.distance(u, v)

    def path_between(self, u: int, v: int) -> List[int]:
        """
        The unique tree path P_T[u, v], endpoints included

        Args:
            u: Start vertex
            v: End vertex

        Returns:
            Vertex list from u to v; [u] when u == v
        """
        meet = self.lca(u, v)
        up = [u]
        while up[-1] != meet:
            up.append(self._parent[up[-1]])
        down = [v]
        while down[-1] != meet:
            down.append(self._parent[down[-1]])
        return up + down[-2::-1]

    def toward(self, u: int, v: int) -> int:
        """
        u's neighbour on the path P_T[u, v]

        Raises:
            ValueError: If u == v
        """
        if u == v:
            raise ValueError(f"toward({u}, {v}) is undefined for equal vertices")
        if not self.is_ancestor(u, v):
            return self._parent[u]
        # v lies below u: climb from v to the child of u
        while self._parent[v] != u:
            v = self._parent[v]
        return v

    def lower_endpoint(self, edge: Edge) -> int:
        """Endpoint of a tree edge farther from the root"""
        a, b = edge
        if self._parent[a] == b:
            return a
        if self._parent[b] == a:
            return b
        raise ValueError(f"({a}, {b}) is not a tree edge")

    def far_endpoint(self, edge: Edge, v: int) -> int:
        """
        Endpoint of a tree edge farthest from v in the tree

        When v is an endpoint the other endpoint is returned.
        """
        a, b = edge
        lower = self.lower_endpoint(edge)
        upper = b if lower == a else a
        return upper if self.is_ancestor(lower, v) else lower

    def near_endpoint(self, edge: Edge, v: int) -> int:
        """Endpoint of a tree edge in the direction of v"""
        a, b = edge
        return b if self.far_endpoint(edge, v) == a else a

    def subtree(self, v: int) -> List[int]:
        """Vertices below v, v included"""
        return [u for u in range(self.vertex_count) if self.is_ancestor(v, u)]

    # ==================== Dunder ====================

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RootedTree):
            return NotImplemented
        return self._root == other._root and self._parent == other._parent

    def __hash__(self) -> int:
        return hash((self._root, self._parent))

    def __repr__(self) -> str:
        return f"<RootedTree(root={self._root}, vertices={self.vertex_count})>"


@dataclass(frozen=True)
class TreeClassification:
    """Leaves, branch vertices and branch vertices grouped by degree"""

    leaves: FrozenSet[int]
    branch: FrozenSet[int]
    branch_by_degree: Dict[int, FrozenSet[int]] = field(default_factory=dict)

    def with_degree(self, k: int) -> FrozenSet[int]:
        """B_k(T)"""
        return self.branch_by_degree.get(k, frozenset())

    def with_degree_at_least(self, k: int) -> FrozenSet[int]:
        """B_{>=k}(T)"""
        return frozenset(v for d, group in self.branch_by_degree.items() if d >= k for v in group)

    def with_degree_at_most(self, k: int) -> FrozenSet[int]:
        """B_{<=k}(T)"""
        return frozenset(v for d, group in self.branch_by_degree.items() if d <= k for v in group)

    @property
    def leaf_plus_branch(self) -> int:
        return len(self.leaves) + len(self.branch)


def classify(tree: RootedTree) -> TreeClassification:
    """
    Split tree vertices into leaves (degree 1) and branch vertices (degree >= 3)

    Args:
        tree: Tree with at least two vertices

    Returns:
        TreeClassification
    """
    if tree.vertex_count < 2:
        raise ValueError("classification needs a tree with at least two vertices")

    leaves = []
    by_degree: Dict[int, List[int]] = {}
    for v in range(tree.vertex_count):
        d = tree.degree(v)
        if d == 1:
            leaves.append(v)
        elif d >= 3:
            by_degree.setdefault(d, []).append(v)

    return TreeClassification(
        leaves=frozenset(leaves),
        branch=frozenset(v for group in by_degree.values() for v in group),
        branch_by_degree={d: frozenset(group) for d, group in by_degree.items()},
    )


def dfs_spanning_tree(graph: Graph, root: int = 0) -> RootedTree:
    """
    Depth-first spanning tree, neighbours explored in ascending id order

    Args:
        graph: Connected graph
        root: Start vertex

    Returns:
        RootedTree rooted at root

    Raises:
        DisconnectedGraphError: If some vertex is unreachable from root
    """
    if not 0 <= root < graph.vertex_count:
        raise ValueError(f"root {root} out of range for {graph.vertex_count} vertices")

    parent: List[Optional[int]] = [None] * graph.vertex_count
    seen = [False] * graph.vertex_count
    seen[root] = True
    stack: List[Tuple[int, int]] = [(root, 0)]
    reached = 1
    while stack:
        u, index = stack[-1]
        neighbors = graph.neighbors(u)
        while index < len(neighbors) and seen[neighbors[index]]:
            index += 1
        if index == len(neighbors):
            stack.pop()
            continue
        v = neighbors[index]
        stack[-1] = (u, index + 1)
        seen[v] = True
        parent[v] = u
        reached += 1
        stack.append((v, 0))

    if reached != graph.vertex_count:
        raise DisconnectedGraphError(
            f"graph is disconnected: {graph.vertex_count - reached} vertices unreachable from {root}"
        )
    return RootedTree(root, parent)
