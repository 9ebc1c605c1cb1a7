"""Hajos sum and vertex-sum (vertex identification) of graphs.

Id layout of a fusion: part 0 keeps its ids, later parts are appended in
order with the identified vertex removed and the remaining ids compacted.
The fused vertex takes the smallest freed id, i.e. the id of the identified
vertex of part 0. Every non-fused vertex is relabeled ``<label>_<part+1>``
so labels stay unique and carry provenance.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import EdgeNotPresent, InvalidParameter
from .graph import Graph


@dataclass(frozen=True)
class HajosSpec:
    g1: Graph
    x1: int
    y1: int
    g2: Graph
    x2: int
    y2: int

    def __post_init__(self):
        for g, x, y, name in ((self.g1, self.x1, self.y1, "x1y1"), (self.g2, self.x2, self.y2, "x2y2")):
            g.check_vertex(x)
            g.check_vertex(y)
            if not g.has_edge(x, y):
                raise EdgeNotPresent(f"{name} = ({x}, {y}) is not an edge")

    @property
    def parts(self) -> tuple[Graph, Graph]:
        return (self.g1, self.g2)


@dataclass(frozen=True)
class VertexSumSpec:
    parts: tuple  # of (Graph, central vertex id)

    def __init__(self, parts: Sequence[tuple[Graph, int]]):
        parts = tuple((g, int(u)) for g, u in parts)
        if len(parts) < 2:
            raise InvalidParameter(f"vertex-sum needs at least 2 parts, got {len(parts)}")
        for g, u in parts:
            g.check_vertex(u)
        object.__setattr__(self, "parts", parts)

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def graphs(self) -> tuple:
        return tuple(g for g, _ in self.parts)

    @property
    def centers(self) -> tuple:
        return tuple(u for _, u in self.parts)


@dataclass(frozen=True)
class FusionResult:
    graph: Graph
    fused_vertex: int
    origin_map: dict  # (part index, original id) -> new id

    def map_set(self, part: int, vertices) -> frozenset:
        return frozenset(self.origin_map[(part, v)] for v in vertices)

    def part_image(self, part: int) -> dict:
        """Original id -> new id for one part."""
        return {v: new for (p, v), new in self.origin_map.items() if p == part}


def _identify(parts: Sequence[tuple[Graph, int]]):
    """Compute the id map and labels for parts glued at one vertex each."""
    fused = parts[0][1]
    origin = {}
    labels = {}
    next_id = 0
    for i, (g, c) in enumerate(parts):
        for v in range(g.n):
            if v == c and i > 0:
                origin[(i, v)] = fused
                continue
            new = v if i == 0 else next_id
            origin[(i, v)] = new
            if i > 0:
                next_id += 1
            if v != c:
                labels[new] = f"{g.labels[v]}_{i + 1}"
        if i == 0:
            next_id = g.n
    return origin, labels, fused, next_id


def _simple_check(n, edges):
    seen = set()
    for a, b in edges:
        assert a != b, "fusion produced a self-loop"
        key = (min(a, b), max(a, b))
        assert key not in seen, "fusion produced a parallel edge"
        seen.add(key)
    assert all(0 <= v < n for e in edges for v in e)


def hajos_sum(spec: HajosSpec) -> FusionResult:
    """G1(x1y1) +_H G2(x2y2): drop x1y1 and x2y2, merge x1 with x2, add y1y2.

    The merged vertex is labeled ``vH(<x1><x2>)`` using the relabeled names.
    """
    origin, labels, fused, n = _identify(((spec.g1, spec.x1), (spec.g2, spec.x2)))
    x1_name = f"{spec.g1.labels[spec.x1]}_1"
    x2_name = f"{spec.g2.labels[spec.x2]}_2"
    labels[fused] = f"vH({x1_name}{x2_name})"

    drop = ({spec.x1, spec.y1}, {spec.x2, spec.y2})
    edges = []
    for i, g in enumerate(spec.parts):
        for a, b in g.sorted_edges():
            if {a, b} == drop[i]:
                continue
            edges.append((origin[(i, a)], origin[(i, b)]))
    edges.append((origin[(0, spec.y1)], origin[(1, spec.y2)]))
    _simple_check(n, edges)
    graph = Graph(n, edges, [labels[v] for v in range(n)])
    return FusionResult(graph, fused, origin)


def vertex_sum(spec: VertexSumSpec) -> FusionResult:
    """Identify the chosen vertex of every part into one central vertex ``u``."""
    origin, labels, fused, n = _identify(spec.parts)
    labels[fused] = "u"
    edges = []
    for i, g in enumerate(spec.graphs):
        for a, b in g.sorted_edges():
            edges.append((origin[(i, a)], origin[(i, b)]))
    _simple_check(n, edges)
    graph = Graph(n, edges, [labels[v] for v in range(n)])
    return FusionResult(graph, fused, origin)


def copies_spec(g: Graph, u: int, t: int) -> VertexSumSpec:
    if t < 2:
        raise InvalidParameter(f"need at least 2 copies, got {t}")
    return VertexSumSpec([(g, u)] * t)


def vertex_sum_copies(g: Graph, u: int, t: int) -> FusionResult:
    """G_u^t, the vertex-sum of ``t`` copies of ``g`` at ``u``."""
    return vertex_sum(copies_spec(g, u, t))
