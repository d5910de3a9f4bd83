"""Graph model, edge-list I/O and graph-level predicates"""

from src.graph.graph import Edge, Graph, canonical_edge
from src.graph.edge_list import parse_graph, read_graph, save_graph, write_graph
from src.graph.properties import (
    ClawWitness,
    HypothesisReport,
    SigmaValue,
    ceil_two_thirds,
    check_hypothesis,
    claw_witness,
    is_claw_free,
    is_connected,
    line_graph,
    sigma_k,
)

__all__ = [
    "ClawWitness",
    "Edge",
    "Graph",
    "HypothesisReport",
    "SigmaValue",
    "canonical_edge",
    "ceil_two_thirds",
    "check_hypothesis",
    "claw_witness",
    "is_claw_free",
    "is_connected",
    "line_graph",
    "parse_graph",
    "read_graph",
    "save_graph",
    "sigma_k",
    "write_graph",
]
