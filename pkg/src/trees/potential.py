"""
Potential keys for the local search

The search accepts a move only when it strictly decreases PotentialKey, a
lexicographic key built from the extremality conditions on the tree:

1. |B(T)|, the number of branch vertices
2. 0 when some branch vertex has degree exactly 3, else 1
3. sum over branch vertices of degree >= 5 of (degree - 4)
4. the (distance, degree) sequence of branch vertices seen from the root
5. |L(T)|, the number of leaves

Every field is a natural number or a finite sequence of bounded pairs, so
the order is well-founded and the search terminates.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from src.trees.rooted_tree import RootedTree, TreeClassification, classify


@dataclass(frozen=True, order=True)
class TrKey:
    """
    Sorted (distance to root, degree) pairs of the branch vertices

    Compared entry by entry; a proper prefix is smaller (tuple semantics).
    """

    pairs: Tuple[Tuple[int, int], ...] = ()

    def __str__(self) -> str:
        return "[" + ",".join(f"({d},{k})" for d, k in self.pairs) + "]"


@dataclass(frozen=True, order=True)
class PotentialKey:
    """Composite key, compared lexicographically in field order"""

    b_count: int
    b3_flag: int
    excess5: int
    tr_key: TrKey
    leaf_count: int

    def as_tuple(self) -> Tuple:
        return (self.b_count, self.b3_flag, self.excess5, list(self.tr_key.pairs), self.leaf_count)

    def __str__(self) -> str:
        return f"({self.b_count}, {self.b3_flag}, {self.excess5}, {self.tr_key}, {self.leaf_count})"


def tr_key(tree: RootedTree, classification: Optional[TreeClassification] = None) -> TrKey:
    """
    Distance-degree sequence of the branch vertices, shortest distance first

    Args:
        tree: Rooted tree (the root fixes the distances)
        classification: Precomputed classification of tree

    Returns:
        TrKey
    """
    if classification is None:
        classification = classify(tree)
    return TrKey(tuple(sorted((tree.depth(b), tree.degree(b)) for b in classification.branch)))


def potential(tree: RootedTree, classification: Optional[TreeClassification] = None) -> PotentialKey:
    """
    Composite potential of a rooted tree

    Args:
        tree: Rooted tree with at least two vertices
        classification: Precomputed classification of tree

    Returns:
        PotentialKey
    """
    if classification is None:
        classification = classify(tree)

    excess5 = sum(tree.degree(v) - 4 for v in classification.with_degree_at_least(5))
    return PotentialKey(
        b_count=len(classification.branch),
        b3_flag=0 if classification.with_degree(3) else 1,
        excess5=excess5,
        tr_key=tr_key(tree, classification),
        leaf_count=len(classification.leaves),
    )
