"""Seeded randomized audits of the Hajos and vertex-sum bounds.

Every trial draws from its own ``random.Random`` seeded with
``"<seed>:<kind>:<trial>"``, so results do not depend on execution order and
trials can run in worker processes.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor

from .bounds import BoundReport, check_hajos_bounds, check_vsum_bounds
from .graph import Graph, gnp_random_graph, random_connected_graph
from .ops import HajosSpec, VertexSumSpec

DENSITIES = (0.2, 0.5, 0.8)


def trial_rng(seed: int, kind: str, trial: int) -> random.Random:
    return random.Random(f"{seed}:{kind}:{trial}")


def random_hajos_spec(rng: random.Random, min_n: int = 4, max_n: int = 9) -> HajosSpec:
    """Two connected parts, each with a non-pendant x and a random edge xy."""
    picks = []
    for _ in range(2):
        g = random_connected_graph(rng.randint(min_n, max_n), rng.choice(DENSITIES), rng)
        x = rng.choice([v for v in range(g.n) if g.degree[v] >= 2])
        y = rng.choice(sorted(g.neighbors(x)))
        picks.append((g, x, y))
    (g1, x1, y1), (g2, x2, y2) = picks
    return HajosSpec(g1, x1, y1, g2, x2, y2)


def random_vsum_spec(rng: random.Random, max_n: int = 8, ks=(2, 3)) -> VertexSumSpec:
    """Connected parts on 2..max_n vertices, so no centre is isolated."""
    k = rng.choice(ks)
    parts = []
    for _ in range(k):
        g = random_connected_graph(rng.randint(2, max_n), rng.choice(DENSITIES), rng)
        parts.append((g, rng.randrange(g.n)))
    return VertexSumSpec(parts)


def _hajos_trial(args) -> BoundReport:
    seed, i, max_n = args
    return check_hajos_bounds(random_hajos_spec(trial_rng(seed, "hajos", i), max_n=max_n))


def _vsum_trial(args) -> BoundReport:
    seed, i, max_n = args
    return check_vsum_bounds(random_vsum_spec(trial_rng(seed, "vsum", i), max_n=max_n))


def _run(fn, trials, seed, max_n, jobs) -> list[BoundReport]:
    args = [(seed, i, max_n) for i in range(trials)]
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            # map preserves trial order regardless of completion order
            return list(pool.map(fn, args, chunksize=8))
    return [fn(a) for a in args]


def hajos_audit(trials: int, seed: int = 42, max_n: int = 9, jobs: int = 1) -> list[BoundReport]:
    return _run(_hajos_trial, trials, seed, max_n, jobs)


def vsum_audit(trials: int, seed: int = 42, max_n: int = 8, jobs: int = 1) -> list[BoundReport]:
    return _run(_vsum_trial, trials, seed, max_n, jobs)


def random_oracle_graph(rng: random.Random, max_n: int = 10) -> Graph:
    return gnp_random_graph(rng.randint(1, max_n), rng.choice(DENSITIES), rng)
