"""
Refutation certificates

When the local search stops on a tree with more than n leaves plus branch
vertices and no guard is violated, the counting argument of the matching
regime produces an independent, pseudoindependent set of m+1 vertices whose
degree sum is at most |G| - n + m - 2. That set, together with the tree edges
that have no oblique neighbour in it, is the certificate.

verify_certificate recomputes every quantity from the graph and the stored
tree; it never trusts the solver.

Usage:
    from src.solver.certificate import build_certificate, verify_certificate

    cert = build_certificate(g, tree, m=1, n=3)
    assert verify_certificate(g, cert, m=1, n=3).accepted
"""

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Any, Dict, List, Tuple

from src.exceptions import CertificateError
from src.graph.graph import Edge, Graph, canonical_edge
from src.solver.claims import regime, witness_pool
from src.trees.oblique import has_oblique_neighbor_in, is_pseudoindependent
from src.trees.rooted_tree import RootedTree, classify
from src.utils.logger import setup_logger

logger = setup_logger(__name__)


class CertificateMode(str, Enum):
    CASE1 = "case1"
    CASE2 = "case2"


@dataclass(frozen=True)
class Certificate:
    """
    Witness that sigma_{m+1}(G) <= |G| - n + m - 2

    Attributes:
        mode: Counting argument used (case1: leaves only; case2: leaves and
            degree-3 branch vertices)
        witness: The m+1 witness vertices, ascending
        root: Root of the fixpoint tree
        edges_no_oblique: Tree edges without an oblique neighbour in witness
        count: Number of such edges listed
        degree_sum: Sum of host-graph degrees over witness
        bound: |G| - n + m - 2
        fixpoint_tree: Tree the certificate was read from
        parts: The listed edges grouped as in the counting argument
            (A, B for case1; C, D, E for case2)
    """

    mode: CertificateMode
    witness: Tuple[int, ...]
    root: int
    edges_no_oblique: Tuple[Edge, ...]
    count: int
    degree_sum: int
    bound: int
    fixpoint_tree: RootedTree = field(compare=False)
    parts: Dict[str, Tuple[Edge, ...]] = field(default_factory=dict, compare=False)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "mode": self.mode.value,
            "witness": list(self.witness),
            "root": self.root,
            "edges_no_oblique": [list(e) for e in self.edges_no_oblique],
            "count": self.count,
            "degree_sum": self.degree_sum,
            "bound": self.bound,
            "fixpoint_tree": {
                "root": self.fixpoint_tree.root,
                "edges": [list(e) for e in self.fixpoint_tree.edges()],
            },
            "parts": {name: [list(e) for e in edges] for name, edges in self.parts.items()},
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Certificate":
        """
        Rebuild a certificate from to_dict output

        Raises:
            CertificateError: If a field is missing or the tree is not a tree
        """
        try:
            tree_data = data["fixpoint_tree"]
            tree_edges = [tuple(e) for e in tree_data["edges"]]
            tree = RootedTree.from_edges(len(tree_edges) + 1, tree_edges, int(tree_data["root"]))
            return cls(
                mode=CertificateMode(data["mode"]),
                witness=tuple(int(v) for v in data["witness"]),
                root=int(data["root"]),
                edges_no_oblique=tuple(canonical_edge(int(a), int(b)) for a, b in data["edges_no_oblique"]),
                count=int(data["count"]),
                degree_sum=int(data["degree_sum"]),
                bound=int(data["bound"]),
                fixpoint_tree=tree,
                parts={
                    name: tuple(canonical_edge(int(a), int(b)) for a, b in edges)
                    for name, edges in data.get("parts", {}).items()
                },
            )
        except (KeyError, TypeError, ValueError) as e:
            raise CertificateError("malformed", f"cannot read certificate: {e}") from e


@dataclass(frozen=True)
class VerificationResult:
    """Outcome of verify_certificate; falsy when rejected"""

    accepted: bool
    reason: str = "ok"
    message: str = ""

    def __bool__(self) -> bool:
        return self.accepted


def certificate_bound(vertex_count: int, m: int, n: int) -> int:
    return vertex_count - n + m - 2


def _oblique_free(graph: Graph, tree: RootedTree, edge: Edge, witness: Tuple[int, ...]) -> bool:
    return not has_oblique_neighbor_in(graph, tree, edge, witness)


def _leaf_edge(tree: RootedTree, leaf: int) -> Edge:
    """ll_r: the only tree edge at a leaf"""
    return canonical_edge(leaf, tree.neighbors(leaf)[0])


def _case1_parts(graph: Graph, tree: RootedTree, m: int) -> Tuple[Tuple[int, ...], Dict[str, List[Edge]]]:
    classification = classify(tree)
    leaves = sorted(classification.leaves)
    if len(leaves) < m + 1:
        raise CertificateError("witness-size", f"{len(leaves)} leaves, need {m + 1}")
    witness = tuple(leaves[:m + 1])

    part_a = [_leaf_edge(tree, leaf) for leaf in leaves[m + 1:]]

    part_b: List[Edge] = []
    for b in sorted(classification.branch):
        for b1, b2 in combinations(tree.children(b), 2):
            e1, e2 = canonical_edge(b, b1), canonical_edge(b, b2)
            if graph.has_edge(b1, b2) and _oblique_free(graph, tree, e1, witness) \
                    and _oblique_free(graph, tree, e2, witness):
                part_b.extend([e1, e2])
                break
        else:
            raise CertificateError("missing-pair", f"branch vertex {b} has no adjacent children free of the witness")

    return witness, {"A": part_a, "B": part_b}


def _case2_parts(graph: Graph, tree: RootedTree, m: int) -> Tuple[Tuple[int, ...], Dict[str, List[Edge]]]:
    classification = classify(tree)
    root = tree.root
    pool = witness_pool(tree, classification)
    if len(pool) < m + 1:
        raise CertificateError("witness-size", f"{len(pool)} candidates in H, need {m + 1}")
    witness = tuple(pool[:m + 1])
    chosen = set(witness)

    part_c: List[Edge] = []
    for u in sorted(classification.with_degree(3) - chosen - {root}):
        free = [canonical_edge(u, a) for a in tree.children(u)
                if _oblique_free(graph, tree, canonical_edge(u, a), witness)]
        if not free:
            raise CertificateError("missing-edge", f"degree-3 vertex {u} has no child edge free of the witness")
        part_c.append(free[0])

    for r1, r2 in combinations(tree.neighbors(root), 2):
        e1, e2 = canonical_edge(root, r1), canonical_edge(root, r2)
        if graph.has_edge(r1, r2) and _oblique_free(graph, tree, e1, witness) \
                and _oblique_free(graph, tree, e2, witness):
            part_c.extend([e1, e2])
            break
    else:
        raise CertificateError("missing-pair", f"root {root} has no adjacent neighbours free of the witness")

    part_d: List[Edge] = []
    for b in sorted(classification.with_degree_at_least(4)):
        kids = tree.children(b)
        free = [
            canonical_edge(b, c) for c in kids
            if _oblique_free(graph, tree, canonical_edge(b, c), witness)
            and any(graph.has_edge(c, other) for other in kids if other != c)
        ]
        if not free:
            raise CertificateError("missing-edge", f"branch vertex {b} has no paired child edge free of the witness")
        part_d.append(free[0])

    part_e = [_leaf_edge(tree, leaf) for leaf in sorted(classification.leaves - chosen)]

    return witness, {"C": part_c, "D": part_d, "E": part_e}


def build_certificate(graph: Graph, tree: RootedTree, m: int, n: int) -> Certificate:
    """
    Read a refutation certificate off a locally irreducible tree

    Args:
        graph: Host graph
        tree: Spanning tree on which find_violation found nothing
        m: Witness size minus one
        n: Target bound on leaves plus branch vertices

    Returns:
        Certificate that passes verify_certificate

    Raises:
        CertificateError: If the tree already meets the bound, a set of the
            counting argument cannot be formed, the sets overlap, or the
            result fails verification
    """
    classification = classify(tree)
    if classification.leaf_plus_branch <= n:
        raise CertificateError(
            "precondition", f"tree already has {classification.leaf_plus_branch} <= {n} leaves plus branch vertices"
        )

    mode = CertificateMode(regime(classification))
    if mode is CertificateMode.CASE1:
        witness, parts = _case1_parts(graph, tree, m)
    else:
        witness, parts = _case2_parts(graph, tree, m)

    listed = [e for edges in parts.values() for e in edges]
    if len(set(listed)) != len(listed):
        overlap = sorted({e for e in listed if listed.count(e) > 1})
        raise CertificateError("overlap", f"counting sets share edges {overlap}")

    cert = Certificate(
        mode=mode,
        witness=witness,
        root=tree.root,
        edges_no_oblique=tuple(sorted(listed)),
        count=len(listed),
        degree_sum=sum(graph.degree(v) for v in witness),
        bound=certificate_bound(graph.vertex_count, m, n),
        fixpoint_tree=tree,
        parts={name: tuple(edges) for name, edges in parts.items()},
    )

    result = verify_certificate(graph, cert, m, n)
    if not result:
        raise CertificateError(result.reason, result.message)

    logger.debug(f"Built {mode.value} certificate: witness={witness}, count={cert.count}, "
                 f"degree_sum={cert.degree_sum}, bound={cert.bound}")
    return cert


def verify_certificate(graph: Graph, cert: Certificate, m: int, n: int) -> VerificationResult:
    """
    Independently check a certificate against a graph

    An accepted certificate proves sigma_{m+1}(G) <= |G| - n + m - 2.

    Args:
        graph: Host graph
        cert: Certificate to check
        m: Witness size minus one
        n: Target bound on leaves plus branch vertices

    Returns:
        VerificationResult carrying a reason code when rejected
    """
    def reject(reason: str, message: str) -> VerificationResult:
        logger.debug(f"Certificate rejected: {reason}: {message}")
        return VerificationResult(False, reason, message)

    tree = cert.fixpoint_tree
    if tree.vertex_count != graph.vertex_count or not tree.spans(graph):
        return reject("tree-mismatch", "fixpoint tree is not a spanning tree of the graph")
    if tree.root != cert.root:
        return reject("tree-mismatch", f"root {cert.root} differs from the tree root {tree.root}")

    witness = cert.witness
    if len(witness) != m + 1 or len(set(witness)) != m + 1:
        return reject("witness-size", f"witness has {len(set(witness))} distinct vertices, need {m + 1}")
    if any(not 0 <= v < graph.vertex_count for v in witness):
        return reject("vertex-range", f"witness {list(witness)} has out-of-range vertices")
    if not graph.is_independent(witness):
        return reject("not-independent", f"witness {list(witness)} contains adjacent vertices")
    if not is_pseudoindependent(graph, tree, witness):
        return reject("not-pseudoindependent", f"witness {list(witness)} contains pseudoadjacent vertices")

    edges = cert.edges_no_oblique
    if len(set(edges)) != len(edges):
        return reject("duplicate-edge", "an edge is listed twice")
    for edge in edges:
        if not tree.has_edge(*edge):
            return reject("not-tree-edge", f"{edge} is not an edge of the fixpoint tree")
        if has_oblique_neighbor_in(graph, tree, canonical_edge(*edge), witness):
            return reject("oblique-neighbor", f"{edge} has an oblique neighbour in the witness")

    if cert.count != len(edges):
        return reject("count-mismatch", f"count {cert.count} but {len(edges)} edges listed")
    if cert.count < n + 1 - m:
        return reject("count-too-small", f"count {cert.count} < n + 1 - m = {n + 1 - m}")

    degree_sum = sum(graph.degree(v) for v in witness)
    if cert.degree_sum != degree_sum:
        return reject("degree-sum-mismatch", f"stated {cert.degree_sum}, recomputed {degree_sum}")
    if degree_sum > len(tree.edges()) - cert.count:
        return reject("edge-budget", f"degree sum {degree_sum} exceeds {len(tree.edges())} - {cert.count}")

    bound = certificate_bound(graph.vertex_count, m, n)
    if cert.bound != bound:
        return reject("bound-mismatch", f"stated bound {cert.bound}, expected {bound}")
    if degree_sum > bound:
        return reject("bound-exceeded", f"degree sum {degree_sum} > {bound}")

    return VerificationResult(True)
