"""
Oblique neighbours and pseudoadjacency

A vertex v is an oblique neighbour of a tree edge e when v is adjacent in G to
the endpoint of e farthest from v. Endpoints count: both endpoints of a tree
edge are oblique neighbours of it. With that convention the number of tree
edges having v as an oblique neighbour equals deg_G(v), because for each
G-neighbour y of v the edge y y_v is the unique such edge ending at y.

Two vertices are pseudoadjacent when some tree edge has both as oblique
neighbours.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, List, Optional, Tuple

from src.graph.graph import Edge, Graph
from src.trees.rooted_tree import RootedTree


@dataclass(frozen=True)
class ObliqueWitness:
    """vertex is an oblique neighbour of edge because it is adjacent to far"""

    edge: Edge
    vertex: int
    far: int


def is_oblique_neighbor(graph: Graph, tree: RootedTree, v: int, edge: Edge) -> bool:
    return graph.has_edge(v, tree.far_endpoint(edge, v))


def oblique_witnesses(graph: Graph, tree: RootedTree, v: int) -> List[ObliqueWitness]:
    """All tree edges having v as an oblique neighbour, in canonical edge order"""
    witnesses = []
    for edge in tree.edges():
        far = tree.far_endpoint(edge, v)
        if graph.has_edge(v, far):
            witnesses.append(ObliqueWitness(edge=edge, vertex=v, far=far))
    return witnesses


def oblique_degree(graph: Graph, tree: RootedTree, v: int) -> int:
    """Number of tree edges with v as an oblique neighbour (equals deg_G(v))"""
    return sum(1 for edge in tree.edges() if is_oblique_neighbor(graph, tree, v, edge))


def pseudoadjacency_witness(graph: Graph, tree: RootedTree, u: int, v: int) -> Optional[Edge]:
    """
    First tree edge (canonical order) having both u and v as oblique neighbours

    Raises:
        ValueError: If u == v
    """
    if u == v:
        raise ValueError(f"pseudoadjacency needs two distinct vertices, got {u} twice")
    for edge in tree.edges():
        if is_oblique_neighbor(graph, tree, u, edge) and is_oblique_neighbor(graph, tree, v, edge):
            return edge
    return None


def is_pseudoindependent(graph: Graph, tree: RootedTree, vertices: Iterable[int]) -> bool:
    """True when no two of the vertices are pseudoadjacent"""
    chosen = sorted(set(vertices))
    for u, v in combinations(chosen, 2):
        if pseudoadjacency_witness(graph, tree, u, v) is not None:
            return False
    return True


def edges_without_oblique_neighbor(graph: Graph, tree: RootedTree, vertices: Iterable[int]) -> Tuple[Edge, ...]:
    """Tree edges none of whose oblique neighbours lie in vertices"""
    chosen = sorted(set(vertices))
    return tuple(
        edge for edge in tree.edges()
        if not any(is_oblique_neighbor(graph, tree, z, edge) for z in chosen)
    )


def has_oblique_neighbor_in(graph: Graph, tree: RootedTree, edge: Edge, vertices: Iterable[int]) -> bool:
    return any(is_oblique_neighbor(graph, tree, z, edge) for z in vertices)
