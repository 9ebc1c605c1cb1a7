"""Evaluate the Hajos-sum and vertex-sum bounds on strong domination.

For a Hajos sum G3 = G1(x1y1) +_H G2(x2y2) with x1, x2 non-pendant::

    gst(G1) + gst(G2) - deg(x1) - deg(x2) + 2 <= gst(G3) <= gst(G1) + gst(G2) + 1

For a vertex-sum at u1..uk::

    sum(gst(Gi) - deg(ui)) + 1 <= gst(sum) <= sum(gst(Gi)) + 1

All gst values come from the exact solver. Degrees are taken in the
original parts. Lower bounds are reported as computed, even when negative.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import HypothesisViolated, InvalidWitness
from .graph import Graph, is_pendant
from .ops import HajosSpec, VertexSumSpec, copies_spec, hajos_sum, vertex_sum
from .solver import gamma_st_exact, is_strong_dominating


@dataclass(frozen=True)
class BoundReport:
    lower: int
    upper: int
    exact: int
    context: str
    parts_gamma: tuple = ()
    degrees: tuple = ()
    nodes_explored: int = 0
    witness: frozenset = field(default=frozenset(), compare=False)

    @property
    def holds(self) -> bool:
        return self.lower <= self.exact <= self.upper

    @property
    def tight(self) -> str:
        at_lower = self.exact == self.lower
        at_upper = self.exact == self.upper
        if at_lower and at_upper:
            return "both"
        if at_lower:
            return "lower"
        if at_upper:
            return "upper"
        return "none"


def hajos_bounds(gamma1: int, gamma2: int, deg_x1: int, deg_x2: int) -> tuple[int, int]:
    return gamma1 + gamma2 - deg_x1 - deg_x2 + 2, gamma1 + gamma2 + 1


def vsum_bounds(gammas, degrees) -> tuple[int, int]:
    return sum(g - d for g, d in zip(gammas, degrees)) + 1, sum(gammas) + 1


def _require_non_pendant(spec: HajosSpec):
    for name, g, x in (("x1", spec.g1, spec.x1), ("x2", spec.g2, spec.x2)):
        if is_pendant(g, x):
            raise HypothesisViolated(f"{name} = {x} is a pendant vertex; the Hajos bound does not apply")


def check_hajos_bounds(spec: HajosSpec) -> BoundReport:
    _require_non_pendant(spec)
    gammas = (gamma_st_exact(spec.g1).optimum, gamma_st_exact(spec.g2).optimum)
    degrees = (spec.g1.degree[spec.x1], spec.g2.degree[spec.x2])
    lower, upper = hajos_bounds(*gammas, *degrees)
    fused = hajos_sum(spec)
    result = gamma_st_exact(fused.graph)
    context = (
        f"hajos n=({spec.g1.n},{spec.g2.n}) x1y1=({spec.x1},{spec.y1}) x2y2=({spec.x2},{spec.y2})"
    )
    return BoundReport(lower, upper, result.optimum, context, gammas, degrees, result.nodes_explored, result.witness)


def check_vsum_bounds(spec: VertexSumSpec, context: str | None = None) -> BoundReport:
    gammas = tuple(gamma_st_exact(g).optimum for g in spec.graphs)
    degrees = tuple(g.degree[u] for g, u in spec.parts)
    lower, upper = vsum_bounds(gammas, degrees)
    result = gamma_st_exact(vertex_sum(spec).graph)
    if context is None:
        sizes = ",".join(str(g.n) for g in spec.graphs)
        context = f"vsum k={spec.k} n=({sizes}) at=({','.join(map(str, spec.centers))})"
    return BoundReport(lower, upper, result.optimum, context, gammas, degrees, result.nodes_explored, result.witness)


def check_copies_bounds(g: Graph, u: int, t: int) -> BoundReport:
    """Bounds for t copies of G summed at u: t(gst(G) - deg(u)) + 1 <= gst(G_u^t) <= t gst(G) + 1."""
    spec = copies_spec(g, u, t)
    report = check_vsum_bounds(spec, context=f"copies n={g.n} at={u} t={t}")
    gamma = report.parts_gamma[0]
    assert (report.lower, report.upper) == (t * (gamma - g.degree[u]) + 1, t * gamma + 1)
    return report


# ---------------------------------------------------------------------------
# replay of the constructive upper-bound sets


def strong_dominated_by(g: Graph, d, a: int, b: int) -> bool:
    """``a`` is strong dominated by ``b`` under ``d``: a outside, b inside, adjacent, deg(a) <= deg(b)."""
    return a not in d and b in d and g.has_edge(a, b) and g.degree[a] <= g.degree[b]


def hajos_upper_case(spec: HajosSpec, d1, d2) -> str:
    """Name the upper-bound proof case, testing (i) through (vi) in order.

    Returns one of ``"i"``, ``"ii"``, ``"iii"``, ``"iv"``, ``"v"``, ``"vi"``.
    The (ii) test is literal (y1 by x1, y2 not by x2); its mirror image falls
    through to (v) or (vi), whose constructions defer back to (ii).
    """
    g1, g2 = spec.g1, spec.g2
    y1_by_x1 = strong_dominated_by(g1, d1, spec.y1, spec.x1)
    y2_by_x2 = strong_dominated_by(g2, d2, spec.y2, spec.x2)
    x1_by_y1 = strong_dominated_by(g1, d1, spec.x1, spec.y1)
    x2_by_y2 = strong_dominated_by(g2, d2, spec.x2, spec.y2)
    if y1_by_x1 and y2_by_x2:
        return "i"
    if y1_by_x1 and not y2_by_x2:
        return "ii"
    if not y1_by_x1 and not y2_by_x2:
        return "iii"
    if x1_by_y1 and x2_by_y2:
        return "iv"
    if x1_by_y1 and not x2_by_y2:
        return "v"
    return "vi"


def _check_witness(g: Graph, d, name: str) -> frozenset:
    d = frozenset(d)
    if not is_strong_dominating(g, d):
        raise InvalidWitness(f"{name} is not a strong dominating set")
    return d


def replay_hajos_upper_construction(spec: HajosSpec, d1, d2) -> frozenset:
    """Build a strong dominating set of the Hajos sum from ones of the parts.

    The result has at most |d1| + |d2| + 1 vertices, and at most |d1| + |d2|
    in case (i).
    """
    _require_non_pendant(spec)
    d1 = _check_witness(spec.g1, d1, "d1")
    d2 = _check_witness(spec.g2, d2, "d2")
    fusion = hajos_sum(spec)
    vh = fusion.fused_vertex
    y1 = fusion.origin_map[(0, spec.y1)]
    y2 = fusion.origin_map[(1, spec.y2)]
    rest1 = fusion.map_set(0, d1 - {spec.x1})
    rest2 = fusion.map_set(1, d2 - {spec.x2})
    deg1, deg2 = spec.g1.degree[spec.y1], spec.g2.degree[spec.y2]

    case = hajos_upper_case(spec, d1, d2)
    y2_by_x2 = strong_dominated_by(spec.g2, d2, spec.y2, spec.x2)
    if case == "i":
        # the y of larger degree takes over domination of the other
        keep = y1 if deg1 >= deg2 else y2
        return rest1 | rest2 | {vh, keep}
    if case == "ii":
        return rest1 | rest2 | {vh, y1}
    if case in ("v", "vi") and y2_by_x2:
        # mirror image of (ii)
        return rest1 | rest2 | {vh, y2}
    # (iii), (iv), and the remaining branches of (v) and (vi); x_i outside d_i
    # makes this coincide with d1 | d2 | {vH}
    return rest1 | rest2 | {vh}


def replay_vsum_upper_construction(spec: VertexSumSpec, d_list) -> frozenset:
    """Union of the mapped part sets plus the central vertex."""
    if len(d_list) != spec.k:
        raise InvalidWitness(f"expected {spec.k} part sets, got {len(d_list)}")
    fusion = vertex_sum(spec)
    out = {fusion.fused_vertex}
    for i, (g, d) in enumerate(zip(spec.graphs, d_list)):
        out |= fusion.map_set(i, _check_witness(g, d, f"d{i + 1}"))
    return frozenset(out)
