"""
Edge-swap moves

A Move removes some tree edges and adds the same number of graph edges.
Edges listed on both sides cancel, so a swap written as
T - {bb1, bb2} + {bz, b1b2} with z == b1 reduces to T - {bb2} + {b1b2}.

Usage:
    from src.trees.moves import Move, apply_move

    move = Move.build(remove=[(0, 1)], add=[(4, 0)], claim_tag="claim3")
    new_tree = apply_move(graph, tree, move)
"""

from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Optional, Sequence, Tuple

from src.exceptions import TreeStructureError
from src.graph.graph import Edge, Graph, canonical_edge
from src.trees.rooted_tree import RootedTree, TreeClassification, classify


@dataclass(frozen=True)
class Move:
    """A reversible edge swap tagged with the claim that produced it"""

    remove: FrozenSet[Edge]
    add: FrozenSet[Edge]
    claim_tag: str
    context: Tuple[int, ...] = field(default=(), compare=False)

    @classmethod
    def build(
        cls,
        remove: Iterable[Sequence[int]],
        add: Iterable[Sequence[int]],
        claim_tag: str,
        context: Sequence[int] = ()
    ) -> "Move":
        """
        Canonicalize edges and cancel edges present on both sides

        Raises:
            ValueError: On a degenerate edge (u, u)
        """
        removed = set()
        for e in remove:
            if e[0] == e[1]:
                raise ValueError(f"degenerate edge {tuple(e)}")
            removed.add(canonical_edge(e[0], e[1]))
        added = set()
        for e in add:
            if e[0] == e[1]:
                raise ValueError(f"degenerate edge {tuple(e)}")
            added.add(canonical_edge(e[0], e[1]))
        common = removed & added
        return cls(
            remove=frozenset(removed - common),
            add=frozenset(added - common),
            claim_tag=claim_tag,
            context=tuple(context),
        )

    def reversed(self) -> "Move":
        return Move(remove=self.add, add=self.remove, claim_tag=self.claim_tag, context=self.context)

    @property
    def is_empty(self) -> bool:
        return not self.remove and not self.add

    def __str__(self) -> str:
        return f"{self.claim_tag}: -{sorted(self.remove)} +{sorted(self.add)}"


def choose_root(tree: RootedTree, classification: TreeClassification, preferred: Optional[int] = None) -> int:
    """
    Root policy for the local search

    Keep the preferred root while it stays in B_3(T); otherwise the smallest
    id in B_3(T), then the preferred root if it is still a branch vertex,
    then the smallest id in B(T), then vertex 0. Without a preferred root
    this is the plain smallest-id policy.
    """
    b3 = classification.with_degree(3)
    if preferred is not None and preferred in b3:
        return preferred
    if b3:
        return min(b3)
    if preferred is not None and preferred in classification.branch:
        return preferred
    if classification.branch:
        return min(classification.branch)
    return 0


def apply_root_policy(tree: RootedTree, preferred: Optional[int] = None) -> RootedTree:
    """Re-root a tree according to choose_root"""
    if tree.vertex_count < 2:
        return tree
    return tree.rerooted(choose_root(tree, classify(tree), preferred))


def apply_move(graph: Graph, tree: RootedTree, move: Move) -> RootedTree:
    """
    Apply an edge swap and return a new tree (the input is unchanged)

    Args:
        graph: Host graph
        tree: Current spanning tree
        move: Swap to apply

    Returns:
        New spanning tree, rooted per choose_root with the old root preferred

    Raises:
        TreeStructureError: If the move is malformed or the result is not a
            spanning tree
    """
    if len(move.remove) != len(move.add):
        raise TreeStructureError(
            f"move removes {len(move.remove)} edges but adds {len(move.add)}", move.remove | move.add
        )

    tree_edges = tree.edge_set()
    missing = frozenset(e for e in move.remove if e not in tree_edges)
    if missing:
        raise TreeStructureError("removed edges are not tree edges", missing)

    already = frozenset(e for e in move.add if e in tree_edges)
    if already:
        raise TreeStructureError("added edges are already tree edges", already)

    foreign = frozenset(e for e in move.add if not graph.has_edge(*e))
    if foreign:
        raise TreeStructureError("added edges are not graph edges", foreign)

    new_edges = (tree_edges - move.remove) | move.add
    try:
        candidate = RootedTree.from_edges(tree.vertex_count, new_edges, tree.root)
    except TreeStructureError:
        raise TreeStructureError("swap does not yield a spanning tree", move.remove | move.add)

    return apply_root_policy(candidate, preferred=tree.root)
