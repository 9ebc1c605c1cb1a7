"""Immutable simple undirected graphs with dense integer ids and string labels."""

from __future__ import annotations

import random
from collections import deque
from typing import Iterable, Mapping, Sequence

from .errors import InvalidParameter, InvalidVertex, SelfLoopRejected

Edge = tuple[int, int]
VertexSet = frozenset  # frozenset[int]


class Graph:
    """A simple undirected graph on vertices ``0 .. n-1``.

    Instances are immutable; every fusion builds a new graph. Degrees,
    adjacency sets and adjacency bitmasks are computed once at construction.
    """

    __slots__ = ("n", "edges", "labels", "degree", "_adj", "_adj_mask", "_index")

    def __init__(self, n: int, edges: Iterable[Edge] = (), labels: Sequence[str] | Mapping[int, str] | None = None):
        if n < 0:
            raise InvalidParameter(f"vertex count must be non-negative, got {n}")
        normalized = set()
        for a, b in edges:
            a, b = int(a), int(b)
            for v in (a, b):
                if not 0 <= v < n:
                    raise InvalidVertex(f"vertex {v} out of range [0, {n})")
            if a == b:
                raise SelfLoopRejected(f"self-loop at vertex {a}")
            normalized.add((a, b) if a < b else (b, a))

        if labels is None:
            names = [f"v{i}" for i in range(n)]
        elif isinstance(labels, Mapping):
            names = [f"v{i}" for i in range(n)]
            for v, name in labels.items():
                if not 0 <= v < n:
                    raise InvalidVertex(f"label for vertex {v} out of range [0, {n})")
                names[v] = str(name)
        else:
            names = [str(x) for x in labels]
            if len(names) != n:
                raise InvalidParameter(f"expected {n} labels, got {len(names)}")
        index = {}
        for v, name in enumerate(names):
            if not name or "#" in name or any(c.isspace() for c in name):
                raise InvalidParameter(f"label {name!r} must be non-empty, without whitespace or '#'")
            if name in index:
                raise InvalidParameter(f"duplicate label {name!r}")
            index[name] = v

        adj = [set() for _ in range(n)]
        for a, b in normalized:
            adj[a].add(b)
            adj[b].add(a)

        self.n = n
        self.edges = frozenset(normalized)
        self.labels = tuple(names)
        self.degree = tuple(len(s) for s in adj)
        self._adj = tuple(frozenset(s) for s in adj)
        self._adj_mask = tuple(sum(1 << u for u in s) for s in adj)
        self._index = index

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges and self.labels == other.labels

    def __hash__(self):
        return hash((self.n, self.edges, self.labels))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def max_degree(self) -> int:
        return max(self.degree, default=0)

    def vertices(self) -> range:
        return range(self.n)

    def check_vertex(self, v: int) -> int:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise InvalidVertex(f"vertex {v!r} out of range [0, {self.n})")
        return v

    def neighbors(self, v: int) -> frozenset:
        return self._adj[self.check_vertex(v)]

    def neighbor_mask(self, v: int) -> int:
        return self._adj_mask[self.check_vertex(v)]

    def has_edge(self, a: int, b: int) -> bool:
        self.check_vertex(a)
        self.check_vertex(b)
        return b in self._adj[a]

    def label(self, v: int) -> str:
        return self.labels[self.check_vertex(v)]

    def vertex_by_label(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise InvalidVertex(f"no vertex labeled {name!r}") from None

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def relabeled(self, labels) -> Graph:
        return Graph(self.n, self.edges, labels)


def make_graph(n: int, edge_list: Iterable[Edge] = (), labels=None) -> Graph:
    """Build a graph, silently dropping duplicate edges."""
    return Graph(n, edge_list, labels)


def neighbors(g: Graph, v: int) -> frozenset:
    return g.neighbors(v)


def is_pendant(g: Graph, v: int) -> bool:
    g.check_vertex(v)
    return g.degree[v] == 1


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in g._adj[v]:
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return len(seen) == g.n


# ---------------------------------------------------------------------------
# generators


def _require(cond: bool, message: str):
    if not cond:
        raise InvalidParameter(message)


def complete_graph(n: int) -> Graph:
    _require(n >= 1, f"complete_graph needs n >= 1, got {n}")
    return Graph(n, ((a, b) for a in range(n) for b in range(a + 1, n)))


def cycle_graph(n: int) -> Graph:
    _require(n >= 3, f"cycle_graph needs n >= 3, got {n}")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    _require(n >= 1, f"path_graph needs n >= 1, got {n}")
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def star_graph(leaves: int) -> Graph:
    """Star K_{1,k}: center ``c`` is vertex 0, leaves ``l1 .. lk``."""
    _require(leaves >= 1, f"star_graph needs at least one leaf, got {leaves}")
    labels = ["c"] + [f"l{i}" for i in range(1, leaves + 1)]
    return Graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)), labels)


def gnp_random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Erdos-Renyi G(n, p) drawn from ``rng``; edges considered in (a, b) order."""
    _require(n >= 1, f"gnp_random_graph needs n >= 1, got {n}")
    _require(0.0 <= p <= 1.0, f"edge probability must lie in [0, 1], got {p}")
    edges = [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < p]
    return Graph(n, edges)


def random_connected_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Random spanning tree (uniform attachment) plus G(n, p) extra edges."""
    _require(n >= 1, f"random_connected_graph needs n >= 1, got {n}")
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < p:
                edges.add((a, b))
    return Graph(n, sorted(edges))
