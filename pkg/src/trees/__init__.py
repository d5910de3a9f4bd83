"""Rooted spanning trees, potentials, edge swaps and oblique neighbours"""

from src.trees.rooted_tree import RootedTree, TreeClassification, classify, dfs_spanning_tree
from src.trees.potential import PotentialKey, TrKey, potential, tr_key
from src.trees.moves import Move, apply_move, apply_root_policy, choose_root
from src.trees.oblique import (
    ObliqueWitness,
    is_oblique_neighbor,
    is_pseudoindependent,
    oblique_degree,
    pseudoadjacency_witness,
)

__all__ = [
    "Move",
    "ObliqueWitness",
    "PotentialKey",
    "RootedTree",
    "TrKey",
    "TreeClassification",
    "apply_move",
    "apply_root_policy",
    "choose_root",
    "classify",
    "dfs_spanning_tree",
    "is_oblique_neighbor",
    "is_pseudoindependent",
    "oblique_degree",
    "potential",
    "pseudoadjacency_witness",
    "tr_key",
]
