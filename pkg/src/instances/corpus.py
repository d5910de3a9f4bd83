"""
Claw-free test corpus

The named graphs plus line graphs of random connected graphs. Line graphs are
always claw-free, but every member is still checked with claw_witness. Members
must be connected, have at most max_vertices vertices and at most tree_limit
spanning trees (the oracle enumerates all of them).

Usage:
    from src.instances.corpus import claw_free_corpus

    for graph_id, g in claw_free_corpus(size_budget=300, seed=0):
        ...
"""

from typing import List, NamedTuple, Optional, Set, Tuple

from src.graph.graph import Edge, Graph
from src.graph.properties import claw_witness, is_connected
from src.instances.generators import GeneratorSpec, SplitMix64
from src.oracle.enumeration import matrix_tree_count
from src.utils.logger import setup_logger
from src.utils.settings import CORPUS_MAX_VERTICES, CORPUS_TREE_LIMIT

logger = setup_logger(__name__)

NAMED_SPECS = [
    "named:name=C5",
    "named:name=C6",
    "named:name=K4",
    "named:name=K5",
    "named:name=net",
    "named:name=four-net",
] + [f"line-of-spider:legs={legs},length={length}" for legs in (3, 4, 5) for length in (1, 2)]

# Base graphs for random line graphs: 4..8 vertices and at most this many edges
BASE_MIN_VERTICES = 4
BASE_MAX_VERTICES = 8
BASE_MAX_EDGES = 12


class CorpusEntry(NamedTuple):
    graph_id: str
    graph: Graph


def _rejection(graph: Graph, max_vertices: int, tree_limit: int) -> Optional[str]:
    if graph.vertex_count > max_vertices:
        return f"{graph.vertex_count} > {max_vertices} vertices"
    if not is_connected(graph):
        return "disconnected"
    witness = claw_witness(graph)
    if witness is not None:
        return f"claw {witness}"
    trees = matrix_tree_count(graph)
    if trees > tree_limit:
        return f"{trees} > {tree_limit} spanning trees"
    return None


def named_graphs() -> List[CorpusEntry]:
    """Named members, deduplicated by edge set (spider line graphs repeat K4, K5, net and four-net)"""
    entries = []
    seen: Set[Tuple[int, Tuple[Edge, ...]]] = set()
    for text in NAMED_SPECS:
        spec = GeneratorSpec.parse(text)
        graph = spec.build()
        key = (graph.vertex_count, graph.edges())
        if key in seen:
            continue
        seen.add(key)
        entries.append(CorpusEntry(spec.label(), graph))
    return entries


def claw_free_corpus(
    size_budget: int = 300,
    seed: int = 0,
    max_vertices: int = CORPUS_MAX_VERTICES,
    tree_limit: int = CORPUS_TREE_LIMIT
) -> List[CorpusEntry]:
    """
    Build the deterministic corpus

    Args:
        size_budget: Number of random line graphs to collect
        seed: Corpus seed; each candidate gets its own derived seed
        max_vertices: Vertex cap per member
        tree_limit: Spanning-tree cap per member

    Returns:
        Named graphs followed by up to size_budget random line graphs
    """
    corpus: List[CorpusEntry] = []
    seen: Set[Tuple[int, Tuple[Edge, ...]]] = set()

    for entry in named_graphs():
        reason = _rejection(entry.graph, max_vertices, tree_limit)
        if reason is not None:
            logger.debug(f"Dropping {entry.graph_id}: {reason}")
            continue
        seen.add((entry.graph.vertex_count, entry.graph.edges()))
        corpus.append(entry)

    rng = SplitMix64(seed)
    collected = 0
    attempts = 0
    max_attempts = 20 * size_budget
    while collected < size_budget and attempts < max_attempts:
        attempts += 1
        nv = BASE_MIN_VERTICES + rng.below(BASE_MAX_VERTICES - BASE_MIN_VERTICES + 1)
        available = nv * (nv - 1) // 2 - (nv - 1)
        extra = rng.below(min(available, BASE_MAX_EDGES - (nv - 1)) + 1)
        spec = GeneratorSpec("line-of-random", (("nv", nv), ("extra", extra)), rng.next_u64())

        graph = spec.build()
        key = (graph.vertex_count, graph.edges())
        if key in seen:
            continue
        reason = _rejection(graph, max_vertices, tree_limit)
        if reason is not None:
            logger.debug(f"Dropping {spec.label()}: {reason}")
            continue
        seen.add(key)
        corpus.append(CorpusEntry(spec.label(), graph))
        collected += 1

    if collected < size_budget:
        logger.warning(f"Collected {collected} of {size_budget} random line graphs after {attempts} attempts")
    logger.debug(f"Corpus of {len(corpus)} graphs (seed {seed})")
    return corpus
