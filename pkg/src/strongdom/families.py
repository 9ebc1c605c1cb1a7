"""Generators for instances where the Hajos and vertex-sum bounds are tight.

Most families are built from "pendant pairs": a middle vertex with one
pendant leaf hanging off it. Each pair forces exactly one vertex into any
strong dominating set, which makes the optimum easy to reason about.

Tightness is a claim to be checked by the solver, never assumed; see
``tests/test_families.py``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import InvalidParameter
from .graph import Graph, complete_graph, cycle_graph
from .ops import HajosSpec, VertexSumSpec


class _Builder:
    def __init__(self):
        self.labels: list[str] = []
        self.edges: list[tuple[int, int]] = []

    def add(self, label: str) -> int:
        self.labels.append(label)
        return len(self.labels) - 1

    def join(self, a: int, b: int):
        self.edges.append((a, b))

    def pendant_pair(self, anchor: int, name: str):
        mid = self.add(f"{name}m")
        leaf = self.add(f"{name}l")
        self.join(anchor, mid)
        self.join(mid, leaf)

    def graph(self) -> Graph:
        return Graph(len(self.labels), self.edges, self.labels)


def figure1_instance() -> HajosSpec:
    """K6 and C6 joined along their lowest-id edges, (0, 1) in both."""
    k6 = complete_graph(6).relabeled([f"a{i}" for i in range(6)])
    c6 = cycle_graph(6).relabeled([f"b{i}" for i in range(6)])
    return HajosSpec(k6, 0, 1, c6, 0, 1)


def vsum_upper_part() -> Graph:
    """u joined to two supports, each carrying two pendant leaves (7 vertices)."""
    b = _Builder()
    u = b.add("u")
    for s in (1, 2):
        sup = b.add(f"s{s}")
        b.join(u, sup)
        for leaf in (1, 2):
            b.join(sup, b.add(f"s{s}l{leaf}"))
    return b.graph()


def vsum_upper_family(k: int) -> VertexSumSpec:
    if k < 2:
        raise InvalidParameter(f"need k >= 2 parts, got {k}")
    part = vsum_upper_part()
    return VertexSumSpec([(part, 0)] * k)


def vsum_lower_part(h: int, m: int) -> Graph:
    """Center u adjacent to ``h`` hubs, each hub carrying ``m`` pendant pairs."""
    b = _Builder()
    u = b.add("u")
    for i in range(1, h + 1):
        hub = b.add(f"h{i}")
        b.join(u, hub)
        for j in range(1, m + 1):
            b.pendant_pair(hub, f"h{i}p{j}")
    return b.graph()


def vsum_lower_family(k: int = 2, h: int = 2, m: int = 2) -> VertexSumSpec:
    """Parts whose hubs are forced alone but dominated by u after fusion.

    Requires m + 1 > h so hubs outrank u_i inside each part, and h*k > m + 1
    so the fused centre outranks every hub. The literal instance is h=3, m=4.
    """
    if k < 2 or h < 2 or m < 2:
        raise InvalidParameter(f"need k, h, m >= 2, got k={k} h={h} m={m}")
    if m + 1 <= h:
        raise InvalidParameter(f"hub degree m+1={m + 1} must exceed centre degree h={h}")
    if h * k <= m + 1:
        raise InvalidParameter(f"fused centre degree h*k={h * k} must exceed hub degree m+1={m + 1}")
    part = vsum_lower_part(h, m)
    return VertexSumSpec([(part, 0)] * k)


def hajos_upper_part() -> Graph:
    """x with neighbours y and a spine path s1-s2-s3; s2 also meets y; each s has a leaf.

    Vertex 0 is x and vertex 1 is y.
    """
    b = _Builder()
    x, y = b.add("x"), b.add("y")
    spine = [b.add(f"s{i}") for i in (1, 2, 3)]
    b.join(x, y)
    for s in spine:
        b.join(x, s)
        b.join(s, b.add(f"{b.labels[s]}l"))
    b.join(spine[0], spine[1])
    b.join(spine[1], spine[2])
    b.join(y, spine[1])
    return b.graph()


def hajos_upper_family() -> HajosSpec:
    part = hajos_upper_part()
    return HajosSpec(part, 0, 1, part, 0, 1)


@dataclass(frozen=True)
class HajosLowerSide:
    """One part of the lower-bound family.

    x is joined to y and to ``hubs`` hub vertices. Each hub carries
    ``hub_pairs`` pendant pairs and y carries ``y_pairs`` pendant pairs.
    """

    hubs: int = 2
    hub_pairs: int = 3
    y_pairs: int = 2

    def build(self) -> Graph:
        b = _Builder()
        x, y = b.add("x"), b.add("y")
        b.join(x, y)
        for i in range(1, self.hubs + 1):
            hub = b.add(f"h{i}")
            b.join(x, hub)
            for j in range(1, self.hub_pairs + 1):
                b.pendant_pair(hub, f"h{i}p{j}")
        for j in range(1, self.y_pairs + 1):
            b.pendant_pair(y, f"yp{j}")
        return b.graph()


def hajos_lower_family(side1: HajosLowerSide | None = None, side2: HajosLowerSide | None = None) -> HajosSpec:
    """Pair of parts whose x-neighbourhoods become redundant after the sum.

    In each part the hubs outrank x, so they are needed on top of one vertex
    per pendant pair, and y (or x) is needed too. After fusion vH reaches
    degree hubs1 + hubs2, which dominates every hub, so vH plus one of y1,
    y2 replaces all hubs and both x's. Constraints:

    * hub_pairs > hubs on each side (x cannot dominate its hubs),
    * hubs1 + hubs2 >= hub_pairs + 1 on each side (vH dominates all hubs),
    * y_pairs >= 2 (y outranks its pendant middles).

    The defaults are the smallest symmetric choice; the literal instance is
    sides (2, 3, 5) and (3, 4, 4).
    """
    side1 = side1 or HajosLowerSide()
    side2 = side2 or side1
    fused_degree = side1.hubs + side2.hubs
    for s in (side1, side2):
        if s.hubs < 1 or s.y_pairs < 2:
            raise InvalidParameter(f"need hubs >= 1 and y_pairs >= 2, got {s}")
        if s.hub_pairs <= s.hubs:
            raise InvalidParameter(f"hub_pairs must exceed hubs, got {s}")
        if fused_degree < s.hub_pairs + 1:
            raise InvalidParameter(f"fused degree {fused_degree} cannot dominate hubs of degree {s.hub_pairs + 1}")
    return HajosSpec(side1.build(), 0, 1, side2.build(), 0, 1)


def hajos_lower_literal() -> HajosSpec:
    return hajos_lower_family(HajosLowerSide(2, 3, 5), HajosLowerSide(3, 4, 4))


def vsum_lower_literal_part() -> Graph:
    return vsum_lower_part(3, 4)


class Family(enum.Enum):
    FIGURE1 = "figure1"
    HAJOS_LOWER = "hajos-lower"
    HAJOS_UPPER = "hajos-upper"
    VSUM_UPPER = "vsum-upper"
    VSUM_LOWER = "vsum-lower"


@dataclass(frozen=True)
class FamilyParams:
    """A family plus its scale parameters; ``None`` means the family default.

    ``k`` is the number of parts, ``h`` the hubs per part and ``m`` the
    pendant pairs per hub. The K6/C6 example and the Hajos upper family take none.
    """

    family: Family
    k: int | None = None
    h: int | None = None
    m: int | None = None

    def build(self):
        """Return the HajosSpec or VertexSumSpec for this setting."""
        f = self.family
        if f is Family.FIGURE1:
            return figure1_instance()
        if f is Family.HAJOS_UPPER:
            return hajos_upper_family()
        if f is Family.HAJOS_LOWER:
            d = HajosLowerSide()
            return hajos_lower_family(HajosLowerSide(self.h or d.hubs, self.m or d.hub_pairs, d.y_pairs))
        if f is Family.VSUM_UPPER:
            return vsum_upper_family(self.k or 2)
        return vsum_lower_family(self.k or 2, self.h or 2, self.m or 2)


TIGHT_SIDE = {
    Family.FIGURE1: None,
    Family.HAJOS_LOWER: "lower",
    Family.HAJOS_UPPER: "upper",
    Family.VSUM_UPPER: "upper",
    Family.VSUM_LOWER: "lower",
}
