"""
Deterministic Graph Generators

All randomness comes from SplitMix64, a fixed 64-bit mixing generator:

    state = state + 0x9E3779B97F4A7C15          (mod 2^64)
    z = (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    output = z ^ (z >> 31)

so a GeneratorSpec always produces the same graph, in any implementation.

Usage:
    from src.instances.generators import GeneratorSpec, spider

    g = GeneratorSpec.parse("line-of-spider:legs=3,length=2").build()
    tree = spider(4, 2)
"""

import hashlib
import re
from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple, Union

from src.graph.graph import Edge, Graph
from src.graph.properties import line_graph

MASK64 = (1 << 64) - 1

GENERATOR_KINDS = ("line-of-random", "line-of-spider", "named", "random-connected")

ParamValue = Union[int, float, str]


class SplitMix64:
    """Fixed 64-bit generator used for every corpus and random fixture"""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform-ish integer in [0, bound) by reduction modulo bound"""
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        return self.next_u64() % bound


def path_graph(vertex_count: int) -> Graph:
    """P_n: vertices 0..n-1 in a line"""
    if vertex_count < 1:
        raise ValueError(f"path needs at least 1 vertex, got {vertex_count}")
    return Graph(vertex_count, [(i, i + 1) for i in range(vertex_count - 1)])


def cycle_graph(vertex_count: int) -> Graph:
    if vertex_count < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {vertex_count}")
    return Graph(vertex_count, [(i, (i + 1) % vertex_count) for i in range(vertex_count)])


def complete_graph(vertex_count: int) -> Graph:
    if vertex_count < 1:
        raise ValueError(f"complete graph needs at least 1 vertex, got {vertex_count}")
    return Graph(vertex_count, [(i, j) for i in range(vertex_count) for j in range(i + 1, vertex_count)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with center 0"""
    if leaves < 1:
        raise ValueError(f"star needs at least 1 leaf, got {leaves}")
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def net_graph() -> Graph:
    """Triangle 0-1-2 with pendants 3-0, 4-1, 5-2"""
    return Graph(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)])


def four_net_graph() -> Graph:
    """K_4 on 0..3 with pendants 4-0, 5-1, 6-2, 7-3"""
    edges = [(i, j) for i in range(4) for j in range(i + 1, 4)]
    edges += [(i, i + 4) for i in range(4)]
    return Graph(8, edges)


def spider(legs: int, length: int) -> Graph:
    """
    Tree with center 0 and `legs` paths of `length` edges

    Leg i (0-based) holds vertices 1 + i*length .. (i+1)*length, ordered
    outward from the center.

    Raises:
        ValueError: If legs < 3 or length < 1
    """
    if legs < 3:
        raise ValueError(f"spider needs at least 3 legs, got {legs}")
    if length < 1:
        raise ValueError(f"spider legs need at least 1 edge, got {length}")

    edges: List[Edge] = []
    for i in range(legs):
        previous = 0
        for j in range(length):
            vertex = 1 + i * length + j
            edges.append((previous, vertex))
            previous = vertex
    return Graph(1 + legs * length, edges)


def random_connected(vertex_count: int, extra: int, seed: int) -> Graph:
    """
    Random tree skeleton plus `extra` distinct non-tree edges

    Vertex v >= 1 attaches to a uniform earlier vertex; the extra edges are a
    partial Fisher-Yates draw from the remaining pairs in canonical order.

    Args:
        vertex_count: Number of vertices, at least 1
        extra: Non-tree edges to add
        seed: 64-bit seed

    Returns:
        Connected graph

    Raises:
        ValueError: If extra exceeds the available non-tree pairs
    """
    if vertex_count < 1:
        raise ValueError(f"vertex_count must be >= 1, got {vertex_count}")
    available = vertex_count * (vertex_count - 1) // 2 - (vertex_count - 1)
    if not 0 <= extra <= available:
        raise ValueError(f"extra must lie in [0, {available}] for {vertex_count} vertices, got {extra}")

    rng = SplitMix64(seed)
    tree = {(rng.below(v), v) for v in range(1, vertex_count)}
    rest = [(i, j) for i in range(vertex_count) for j in range(i + 1, vertex_count) if (i, j) not in tree]

    for i in range(extra):
        j = i + rng.below(len(rest) - i)
        rest[i], rest[j] = rest[j], rest[i]

    return Graph(vertex_count, sorted(tree) + rest[:extra])


_NAMED_PATTERN = re.compile(r"^(C|K|P|S)(\d+)$")

_NAMED_FIXED: Dict[str, Callable[[], Graph]] = {
    "net": net_graph,
    "four-net": four_net_graph,
}

_NAMED_FAMILIES: Dict[str, Callable[[int], Graph]] = {
    "C": cycle_graph,
    "K": complete_graph,
    "P": path_graph,
    "S": star_graph,
}


def named_graph(name: str) -> Graph:
    """
    Look up a named graph: C<n>, K<n>, P<n>, S<n> (star with n leaves), net, four-net

    Raises:
        ValueError: On an unknown name
    """
    if name in _NAMED_FIXED:
        return _NAMED_FIXED[name]()
    match = _NAMED_PATTERN.match(name)
    if match is None:
        raise ValueError(f"unknown named graph '{name}'")
    return _NAMED_FAMILIES[match.group(1)](int(match.group(2)))


def _coerce(value: str) -> ParamValue:
    for cast in (int, float):
        try:
            return cast(value)
        except ValueError:
            continue
    return value


@dataclass(frozen=True)
class GeneratorSpec:
    """
    A generator kind with its parameters and seed

    Text form: ``kind:key=value,key=value``. Kinds and their parameters:

        random-connected   nv, extra (or p, the fraction of non-tree pairs)
        line-of-random     nv, extra (or p); the line graph of random-connected
        line-of-spider     legs, length
        named              name
    """

    kind: str
    params: Tuple[Tuple[str, ParamValue], ...] = ()
    seed: int = 0

    def __post_init__(self):
        if self.kind not in GENERATOR_KINDS:
            raise ValueError(f"unknown generator kind '{self.kind}'; expected one of {', '.join(GENERATOR_KINDS)}")
        object.__setattr__(self, "params", tuple(sorted(self.params)))

    @classmethod
    def parse(cls, text: str, seed: int = 0) -> "GeneratorSpec":
        """
        Parse ``kind:key=value,...``

        Raises:
            ValueError: On a malformed parameter or unknown kind
        """
        kind, _, rest = text.strip().partition(":")
        params = []
        for item in filter(None, (part.strip() for part in rest.split(","))):
            key, sep, value = item.partition("=")
            if not sep or not key or not value:
                raise ValueError(f"malformed generator parameter '{item}' in '{text}'")
            params.append((key.strip(), _coerce(value.strip())))
        return cls(kind.strip(), tuple(params), seed)

    @property
    def parameters(self) -> Dict[str, ParamValue]:
        return dict(self.params)

    def _require(self, key: str) -> ParamValue:
        params = self.parameters
        if key not in params:
            raise ValueError(f"generator '{self.kind}' needs parameter '{key}'")
        return params[key]

    def _extra(self, vertex_count: int) -> int:
        params = self.parameters
        if "extra" in params:
            return int(params["extra"])
        if "p" in params:
            available = vertex_count * (vertex_count - 1) // 2 - (vertex_count - 1)
            return int(round(float(params["p"]) * available))
        return 0

    def build(self) -> Graph:
        """Generate the graph; identical specs give identical graphs"""
        if self.kind == "named":
            return named_graph(str(self._require("name")))
        if self.kind == "line-of-spider":
            return line_graph(spider(int(self._require("legs")), int(self._require("length"))))

        vertex_count = int(self._require("nv"))
        base = random_connected(vertex_count, self._extra(vertex_count), self.seed)
        if self.kind == "line-of-random":
            return line_graph(base)
        return base

    def to_text(self) -> str:
        body = ",".join(f"{key}={value}" for key, value in self.params)
        return f"{self.kind}:{body}" if body else self.kind

    def label(self) -> str:
        """Stable identifier; the seed is included only for random kinds"""
        if self.kind in ("named", "line-of-spider"):
            return self.to_text()
        return f"{self.to_text()}@{self.seed}"

    def digest(self) -> str:
        """Short content hash used to name generated files"""
        return hashlib.sha256(self.label().encode("utf-8")).hexdigest()[:12]
