"""Deterministic generators and the claw-free test corpus"""

from src.instances.generators import (
    GENERATOR_KINDS,
    GeneratorSpec,
    SplitMix64,
    complete_graph,
    cycle_graph,
    four_net_graph,
    named_graph,
    net_graph,
    path_graph,
    random_connected,
    spider,
    star_graph,
)
from src.instances.corpus import CorpusEntry, claw_free_corpus, named_graphs

__all__ = [
    "GENERATOR_KINDS",
    "CorpusEntry",
    "GeneratorSpec",
    "SplitMix64",
    "claw_free_corpus",
    "complete_graph",
    "cycle_graph",
    "four_net_graph",
    "named_graph",
    "named_graphs",
    "net_graph",
    "path_graph",
    "random_connected",
    "spider",
    "star_graph",
]
