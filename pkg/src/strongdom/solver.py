"""Exact strong, weak and plain domination numbers.

Two independent routes compute the strong domination number:

* :func:`gamma_st_bruteforce` enumerates subsets by increasing size and is
  the oracle for small graphs.
* :func:`gamma_st_exact` is a branch-and-bound search that scales to a few
  dozen vertices when the graph has forced structure.

Both return the lexicographically smallest optimal set (by sorted ids), so
their witnesses agree exactly, not just their optima.

Internally a vertex set is an ``int`` bitmask; the public API takes and
returns ``frozenset`` objects.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import InvalidVertex, NoSetWithinCap, OracleTooLarge
from .graph import Graph

DEFAULT_ORACLE_LIMIT = 26
ORACLE_LIMIT_ENV = "STRONGDOM_ORACLE_LIMIT"


class Method(enum.Enum):
    BRUTE_FORCE = "brute"
    BRANCH_AND_BOUND = "bb"


@dataclass(frozen=True)
class SolveResult:
    optimum: int
    witness: frozenset
    nodes_explored: int
    method: Method
    kind: str = "strong"

    @property
    def sorted_witness(self) -> list[int]:
        return sorted(self.witness)


def oracle_limit(limit: int | None = None) -> int:
    """Resolve the brute-force vertex cap: explicit argument, then env var, then default."""
    if limit is not None:
        return int(limit)
    env = os.environ.get(ORACLE_LIMIT_ENV)
    if env:
        return int(env)
    return DEFAULT_ORACLE_LIMIT


# ---------------------------------------------------------------------------
# predicates, written straight from the definitions


def _members(g: Graph, d: Iterable[int]) -> set:
    members = set(d)
    for v in members:
        if not isinstance(v, int) or not 0 <= v < g.n:
            raise InvalidVertex(f"set member {v!r} out of range [0, {g.n})")
    return members


def _dominated_by(g: Graph, d: Iterable[int], ok) -> bool:
    members = _members(g, d)
    for x in range(g.n):
        if x in members:
            continue
        if not any(ok(x, y) for y in g.neighbors(x) if y in members):
            return False
    return True


def is_dominating(g: Graph, d: Iterable[int]) -> bool:
    return _dominated_by(g, d, lambda x, y: True)


def is_strong_dominating(g: Graph, d: Iterable[int]) -> bool:
    """Every x outside ``d`` has a neighbour y in ``d`` with deg(x) <= deg(y)."""
    deg = g.degree
    return _dominated_by(g, d, lambda x, y: deg[x] <= deg[y])


def is_weak_dominating(g: Graph, d: Iterable[int]) -> bool:
    """Every x outside ``d`` has a neighbour y in ``d`` with deg(x) >= deg(y)."""
    deg = g.degree
    return _dominated_by(g, d, lambda x, y: deg[x] >= deg[y])


PREDICATES = {
    "strong": is_strong_dominating,
    "weak": is_weak_dominating,
    "plain": is_dominating,
}


# ---------------------------------------------------------------------------
# bitmask machinery


def _cover_masks(g: Graph, kind: str) -> list[int]:
    """``masks[v]`` = closed set of vertices that ``v`` dominates under ``kind``."""
    deg = g.degree
    if kind == "strong":
        ok = lambda v, u: deg[u] <= deg[v]  # noqa: E731
    elif kind == "weak":
        ok = lambda v, u: deg[u] >= deg[v]  # noqa: E731
    elif kind == "plain":
        ok = lambda v, u: True  # noqa: E731
    else:
        raise ValueError(f"unknown domination kind {kind!r}")
    masks = []
    for v in range(g.n):
        m = 1 << v
        for u in g.neighbors(v):
            if ok(v, u):
                m |= 1 << u
        masks.append(m)
    return masks


def _dominator_masks(masks: list[int]) -> list[int]:
    """Transpose: ``dom[w]`` = set of vertices able to dominate ``w``."""
    dom = [0] * len(masks)
    for v, m in enumerate(masks):
        while m:
            low = m & -m
            dom[low.bit_length() - 1] |= 1 << v
            m ^= low
    return dom


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _to_set(mask: int) -> frozenset:
    return frozenset(_bits(mask))


def _forced_mask(g: Graph, kind: str) -> int:
    dom = _dominator_masks(_cover_masks(g, kind))
    return sum(1 << w for w in range(g.n) if dom[w] == 1 << w)


def forced_vertices(g: Graph) -> frozenset:
    """Vertices contained in every strong dominating set.

    A vertex whose degree strictly exceeds that of each neighbour cannot be
    strong dominated from outside, so it must belong to the set itself.
    Isolated vertices qualify vacuously.
    """
    return _to_set(_forced_mask(g, "strong"))


# ---------------------------------------------------------------------------
# brute force


def _bruteforce(g: Graph, kind: str, size_cap: int | None, limit: int | None) -> SolveResult:
    cap = oracle_limit(limit)
    if g.n > cap:
        raise OracleTooLarge(f"graph has {g.n} vertices, oracle limit is {cap}")
    masks = _cover_masks(g, kind)
    full = (1 << g.n) - 1
    forced = _forced_mask(g, kind)
    base = 0
    for v in _bits(forced):
        base |= masks[v]
    free = [v for v in range(g.n) if not forced >> v & 1]
    n_forced = forced.bit_count()
    nodes = 0
    for size in range(len(free) + 1):
        if size_cap is not None and n_forced + size > size_cap:
            raise NoSetWithinCap(f"no {kind} dominating set of size <= {size_cap}")
        for combo in combinations(free, size):
            nodes += 1
            cov = base
            for v in combo:
                cov |= masks[v]
            if cov == full:
                witness = frozenset(_bits(forced)) | frozenset(combo)
                return SolveResult(len(witness), witness, nodes, Method.BRUTE_FORCE, kind)
    raise AssertionError("the full vertex set always dominates")  # pragma: no cover


def gamma_st_bruteforce(g: Graph, size_cap: int | None = None, limit: int | None = None) -> SolveResult:
    """Strong domination number by exhaustive search in order of increasing size."""
    return _bruteforce(g, "strong", size_cap, limit)


def gamma_plain(g: Graph, limit: int | None = None) -> SolveResult:
    return _bruteforce(g, "plain", None, limit)


def gamma_w(g: Graph, limit: int | None = None) -> SolveResult:
    return _bruteforce(g, "weak", None, limit)


# ---------------------------------------------------------------------------
# greedy


def _greedy_mask(masks: list[int], degree, n: int) -> int:
    full = (1 << n) - 1
    covered = chosen = 0
    while covered != full:
        uncovered = full & ~covered
        best = max(range(n), key=lambda v: ((masks[v] & uncovered).bit_count(), degree[v], -v))
        chosen |= 1 << best
        covered |= masks[best]
    return chosen


def greedy_upper_bound(g: Graph) -> frozenset:
    """Greedy strong dominating set: most newly covered, then higher degree, then lower id."""
    return _to_set(_greedy_mask(_cover_masks(g, "strong"), g.degree, g.n))


# ---------------------------------------------------------------------------
# branch and bound


class _Search:
    def __init__(self, g: Graph, kind: str):
        self.n = g.n
        self.degree = g.degree
        self.full = (1 << g.n) - 1
        self.masks = _cover_masks(g, kind)
        self.dom = _dominator_masks(self.masks)
        self.nodes = 0

    def packing_bound(self, uncovered: int, allowed: int) -> int | None:
        """Size of a greedy packing of uncovered vertices with disjoint dominator sets.

        Each packed vertex needs its own chosen dominator, so the packing size
        is a lower bound on how many more vertices must be chosen. Returns
        ``None`` when some uncovered vertex has no admissible dominator.
        """
        options = []
        for w in _bits(uncovered):
            d = self.dom[w] & allowed
            if not d:
                return None
            options.append((d.bit_count(), w, d))
        options.sort()
        used = count = 0
        for _, _, d in options:
            if not d & used:
                used |= d
                count += 1
        return count

    def minimize(self, forced: int, incumbent: int) -> int:
        """Return a minimum dominating mask containing ``forced``."""
        masks, dom, degree = self.masks, self.dom, self.degree
        best = [incumbent.bit_count(), incumbent]

        def rec(count, chosen, covered, allowed):
            self.nodes += 1
            uncovered = self.full & ~covered
            if not uncovered:
                if count < best[0]:
                    best[0], best[1] = count, chosen
                return
            lb = self.packing_bound(uncovered, allowed)
            if lb is None or count + lb >= best[0]:
                return
            # branch on the uncovered vertex with the fewest admissible dominators
            w = min(_bits(uncovered), key=lambda x: ((dom[x] & allowed).bit_count(), x))
            cands = sorted(
                _bits(dom[w] & allowed),
                key=lambda c: (-(masks[c] & uncovered).bit_count(), -degree[c], c),
            )
            excluded = 0
            for c in cands:
                bit = 1 << c
                rec(count + 1, chosen | bit, covered | masks[c], allowed & ~excluded & ~bit)
                excluded |= bit

        covered = 0
        for v in _bits(forced):
            covered |= masks[v]
        rec(forced.bit_count(), forced, covered, self.full & ~forced)
        return best[1]

    def lex_first(self, forced: int, k: int) -> int | None:
        """Lexicographically smallest dominating mask of size ``k`` containing ``forced``.

        Assumes no smaller dominating set exists. Vertices are decided in
        increasing id order, include before exclude, so the first complete
        set reached is the lexicographic minimum.
        """
        masks = self.masks

        def rec(count, chosen, covered, allowed):
            self.nodes += 1
            uncovered = self.full & ~covered
            if not uncovered:
                return chosen
            lb = self.packing_bound(uncovered, allowed)
            if lb is None or count + lb > k:
                return None
            bit = allowed & -allowed
            v = bit.bit_length() - 1
            rest = allowed & ~bit
            # a vertex adding no coverage cannot appear in a minimum set
            if count < k and masks[v] & uncovered:
                found = rec(count + 1, chosen | bit, covered | masks[v], rest)
                if found is not None:
                    return found
            return rec(count, chosen, covered, rest)

        covered = 0
        for v in _bits(forced):
            covered |= masks[v]
        return rec(forced.bit_count(), forced, covered, self.full & ~forced)


def gamma_st_exact(g: Graph) -> SolveResult:
    """Strong domination number by branch-and-bound.

    Forced vertices seed the search, the greedy set is the first incumbent,
    and subtrees are cut with a disjoint-dominator packing bound. A second
    pass recovers the lexicographically smallest optimum.
    """
    search = _Search(g, "strong")
    forced = _forced_mask(g, "strong")
    greedy = _greedy_mask(search.masks, g.degree, g.n) | forced
    best = search.minimize(forced, greedy)
    k = best.bit_count()
    witness = search.lex_first(forced, k)
    assert witness is not None and witness.bit_count() == k
    return SolveResult(k, _to_set(witness), search.nodes, Method.BRANCH_AND_BOUND, "strong")


def gamma_st(g: Graph, method: str | Method = Method.BRANCH_AND_BOUND, limit: int | None = None) -> SolveResult:
    method = Method(method)
    if method is Method.BRUTE_FORCE:
        return gamma_st_bruteforce(g, limit=limit)
    return gamma_st_exact(g)
