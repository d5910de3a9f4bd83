"""
Edge-list reader and writer

Format: a header line "N M" (vertex count, edge count), then M lines "u v"
with 0 <= u, v < N. Fields are whitespace-separated; a line whose first
non-blank character is '#' is a comment. Blank lines are ignored.

Usage:
    from src.graph.edge_list import parse_graph, write_graph

    g = parse_graph("3 2\\n0 1\\n1 2\\n")
    text = write_graph(g)
"""

from pathlib import Path
from typing import List, Optional, Set, Tuple, Union

from src.exceptions import EdgeListParseError
from src.graph.graph import Edge, Graph, canonical_edge
from src.utils.logger import setup_logger

logger = setup_logger(__name__)


def _parse_int_pair(fields: List[str], line_number: int, what: str) -> Tuple[int, int]:
    if len(fields) != 2:
        raise EdgeListParseError("malformed", line_number, f"expected two integers for {what}, got {len(fields)} fields")
    try:
        first, second = int(fields[0]), int(fields[1])
    except ValueError:
        raise EdgeListParseError("malformed", line_number, f"non-integer field in {what}: {' '.join(fields)}")
    if first < 0 or second < 0:
        raise EdgeListParseError("malformed", line_number, f"negative value in {what}: {' '.join(fields)}")
    return first, second


def parse_graph(text: str) -> Graph:
    """
    Parse an edge-list document

    Args:
        text: Document contents

    Returns:
        Graph with exactly the listed edges

    Raises:
        EdgeListParseError: With reason 'header', 'malformed', 'vertex-range',
            'self-loop', 'duplicate-edge' or 'edge-count' and the line number
    """
    header: Optional[Tuple[int, int]] = None
    edges: List[Edge] = []
    seen: Set[Edge] = set()
    last_line = 0

    for line_number, raw in enumerate(text.splitlines(), start=1):
        last_line = line_number
        line = raw.strip()
        if not line or line.startswith("#"):
            continue

        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise EdgeListParseError("header", line_number, "expected 'N M' header")
            header = _parse_int_pair(fields, line_number, "header")
            continue

        vertex_count = header[0]
        u, v = _parse_int_pair(fields, line_number, "edge")
        if u >= vertex_count or v >= vertex_count:
            raise EdgeListParseError("vertex-range", line_number, f"vertex id >= {vertex_count} in edge ({u}, {v})")
        if u == v:
            raise EdgeListParseError("self-loop", line_number, f"self-loop at vertex {u}")
        edge = canonical_edge(u, v)
        if edge in seen:
            raise EdgeListParseError("duplicate-edge", line_number, f"edge ({u}, {v}) listed twice")
        if len(edges) >= header[1]:
            raise EdgeListParseError("edge-count", line_number, f"more than the declared {header[1]} edges")
        seen.add(edge)
        edges.append((u, v))

    if header is None:
        raise EdgeListParseError("header", max(last_line, 1), "missing 'N M' header")
    if len(edges) != header[1]:
        raise EdgeListParseError("edge-count", last_line, f"declared {header[1]} edges, found {len(edges)}")

    return Graph(header[0], edges)


def write_graph(graph: Graph) -> str:
    """
    Serialize a graph as an edge-list document (canonical edge order)

    Args:
        graph: Graph to write

    Returns:
        Document text ending with a newline
    """
    lines = [f"{graph.vertex_count} {graph.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"


def read_graph(path: Union[str, Path]) -> Graph:
    """
    Load a graph from an edge-list file

    Args:
        path: File path

    Returns:
        Parsed graph
    """
    file_path = Path(path)
    if not file_path.exists():
        raise FileNotFoundError(f"Graph file not found: {file_path}")

    graph = parse_graph(file_path.read_text(encoding="utf-8"))
    logger.debug(f"Loaded {graph} from {file_path}")
    return graph


def save_graph(graph: Graph, path: Union[str, Path]) -> Path:
    """
    Write a graph to an edge-list file, creating parent directories

    Args:
        graph: Graph to write
        path: Destination file

    Returns:
        The written path
    """
    file_path = Path(path)
    file_path.parent.mkdir(parents=True, exist_ok=True)
    file_path.write_text(write_graph(graph), encoding="utf-8")
    logger.info(f"Graph saved: {graph} at {file_path}")
    return file_path
