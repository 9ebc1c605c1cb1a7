"""End-to-end acceptance checks, one test per criterion.

Each test runs under a wall-clock budget and records a PASS/FAIL line; the
lines are printed as they complete and again in the terminal summary.
"""

import random
import time
from contextlib import contextmanager
from fractions import Fraction

import pytest

from strongdom import (
    HajosSpec,
    VertexSumSpec,
    check_hajos_bounds,
    check_vsum_bounds,
    gamma_st_bruteforce,
    gamma_st_exact,
    gamma_w,
    hajos_sum,
    hajos_upper_case,
    is_strong_dominating,
    read_graph,
    replay_hajos_upper_construction,
    replay_vsum_upper_construction,
    vertex_sum,
    write_graph,
)
from strongdom.audit import DENSITIES, hajos_audit, random_hajos_spec, random_oracle_graph, random_vsum_spec, vsum_audit
from strongdom.families import hajos_lower_family, hajos_upper_family, vsum_lower_family, vsum_upper_family
from strongdom.graph import gnp_random_graph, random_connected_graph

RESULTS = []


@contextmanager
def criterion(number, name, limit):
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        ok = ok and elapsed <= limit
        line = f"[{'PASS' if ok else 'FAIL'}] {number:2d}. {name} ({elapsed:.2f}s, limit {limit:g}s)"
        RESULTS.append(line)
        print("\n" + line)
    assert elapsed <= limit, f"took {elapsed:.1f}s, limit {limit}s"


def test_01_oracle_equivalence():
    with criterion(1, "exact solver matches brute force on 500 random graphs", 60):
        rng = random.Random(20240101)
        mismatches = []
        for i in range(500):
            g = random_oracle_graph(rng, max_n=10)
            exact, brute = gamma_st_exact(g), gamma_st_bruteforce(g)
            if exact.optimum != brute.optimum or not is_strong_dominating(g, exact.witness):
                mismatches.append(i)
        assert mismatches == []


def test_02_hajos_audit():
    with criterion(2, "Hajos bounds hold on 200 random specs", 300):
        reports = hajos_audit(200, seed=42, max_n=9)
        assert len(reports) == 200
        for r in reports:
            assert r.lower == sum(r.parts_gamma) - sum(r.degrees) + 2
            assert r.upper == sum(r.parts_gamma) + 1
        assert [r.context for r in reports if not r.holds] == []


def test_03_vsum_audit():
    with criterion(3, "vertex-sum bounds hold on 200 random specs", 300):
        reports = vsum_audit(200, seed=42, max_n=8)
        assert {len(r.parts_gamma) for r in reports} == {2, 3}
        for r in reports:
            assert r.lower == sum(r.parts_gamma) - sum(r.degrees) + 1
            assert r.upper == sum(r.parts_gamma) + 1
        assert [r.context for r in reports if not r.holds] == []


def test_04_hajos_upper_family():
    with criterion(4, "Hajos upper family is tight (brute force)", 30):
        spec = hajos_upper_family()
        assert gamma_st_bruteforce(spec.g1).optimum == 3
        assert gamma_st_bruteforce(spec.g2).optimum == 3
        g3 = hajos_sum(spec).graph
        assert g3.n == 15
        assert gamma_st_bruteforce(g3).optimum == 7 == 3 + 3 + 1


def test_05_vsum_upper_family():
    with criterion(5, "vertex-sum upper family is tight at k=2,3 (brute force)", 60):
        for k, expected in ((2, 5), (3, 7)):
            spec = vsum_upper_family(k)
            parts = [gamma_st_bruteforce(g).optimum for g in spec.graphs]
            fused = gamma_st_bruteforce(vertex_sum(spec).graph).optimum
            assert fused == expected == sum(parts) + 1


def test_06_vsum_lower_family():
    with criterion(6, "vertex-sum lower family (k=2,h=2,m=2) is tight", 120):
        spec = vsum_lower_family(k=2, h=2, m=2)
        r = check_vsum_bounds(spec)
        assert r.parts_gamma == (6, 6) and r.degrees == (2, 2)
        assert r.exact == r.lower == 9
        # oracle spot check on the 21-vertex fusion and one part
        assert gamma_st_bruteforce(vertex_sum(spec).graph).optimum == 9
        assert gamma_st_bruteforce(spec.graphs[0]).optimum == 6


def test_07_hajos_lower_family():
    with criterion(7, "Hajos lower family smallest instance is tight", 120):
        r = check_hajos_bounds(hajos_lower_family())
        assert r.exact == r.lower


def _check_hajos_identities(spec):
    f = hajos_sum(spec)
    g1, g2, g3 = spec.g1, spec.g2, f.graph
    assert g3.n == g1.n + g2.n - 1
    assert g3.m == g1.m + g2.m - 1
    assert g3.degree[f.fused_vertex] == g1.degree[spec.x1] + g2.degree[spec.x2] - 2
    assert g3.has_edge(f.origin_map[(0, spec.y1)], f.origin_map[(1, spec.y2)])
    for part, g, x in ((0, g1, spec.x1), (1, g2, spec.x2)):
        for v in g.vertices():
            if v != x:
                assert g3.degree[f.origin_map[(part, v)]] == g.degree[v]


def _check_vsum_identities(spec):
    f = vertex_sum(spec)
    g = f.graph
    assert g.n == sum(p.n for p in spec.graphs) - spec.k + 1
    assert g.m == sum(p.m for p in spec.graphs)
    assert g.degree[f.fused_vertex] == sum(p.degree[u] for p, u in zip(spec.graphs, spec.centers))
    for i, (p, u) in enumerate(zip(spec.graphs, spec.centers)):
        for v in p.vertices():
            if v != u:
                assert g.degree[f.origin_map[(i, v)]] == p.degree[v]
        for a, b in p.edges:
            assert g.has_edge(f.origin_map[(i, a)], f.origin_map[(i, b)])


def test_08_construction_identities():
    with criterion(8, "fusion identities on 1000 random constructions", 30):
        rng = random.Random(8)
        for i in range(1000):
            if i % 2 == 0:
                picks = []
                for _ in range(2):
                    g = random_connected_graph(rng.randint(2, 10), rng.choice(DENSITIES), rng)
                    x, y = rng.choice(g.sorted_edges())
                    picks.append((g, x, y) if rng.random() < 0.5 else (g, y, x))
                _check_hajos_identities(HajosSpec(*picks[0], *picks[1]))
            else:
                parts = []
                for _ in range(rng.randint(2, 4)):
                    g = gnp_random_graph(rng.randint(1, 9), rng.choice(DENSITIES), rng)
                    parts.append((g, rng.randrange(g.n)))
                _check_vsum_identities(VertexSumSpec(parts))


def test_09_proof_replay():
    with criterion(9, "constructive upper-bound sets replay on random specs", 120):
        rng = random.Random(9)
        case_i = 0
        for _ in range(100):
            spec = random_hajos_spec(rng)
            r1, r2 = gamma_st_exact(spec.g1), gamma_st_exact(spec.g2)
            d3 = replay_hajos_upper_construction(spec, r1.witness, r2.witness)
            assert is_strong_dominating(hajos_sum(spec).graph, d3)
            assert len(d3) <= r1.optimum + r2.optimum + 1
            if hajos_upper_case(spec, r1.witness, r2.witness) == "i":
                case_i += 1
                assert len(d3) <= r1.optimum + r2.optimum
        assert case_i > 0
        for _ in range(100):
            spec = random_vsum_spec(rng)
            results = [gamma_st_exact(g) for g in spec.graphs]
            d = replay_vsum_upper_construction(spec, [r.witness for r in results])
            assert is_strong_dominating(vertex_sum(spec).graph, d)
            assert len(d) <= sum(r.optimum for r in results) + 1


def test_10_boutrig_chellali():
    with criterion(10, "weak/strong inequality on 300 connected graphs", 120):
        rng = random.Random(10)
        for _ in range(300):
            g = random_connected_graph(rng.randint(3, 10), rng.choice(DENSITIES), rng)
            lhs = gamma_w(g).optimum + Fraction(3, g.max_degree + 1) * gamma_st_exact(g).optimum
            assert lhs <= g.n


def test_11_io_round_trip(tmp_path):
    with criterion(11, "100 random graphs rewrite byte-identically", 30):
        rng = random.Random(11)
        for i in range(100):
            g = gnp_random_graph(rng.randint(1, 15), rng.choice(DENSITIES), rng)
            if rng.random() < 0.5:
                g = g.relabeled([f"n{rng.randrange(10**6)}_{v}" for v in g.vertices()])
            suffix = ".json" if i % 3 == 0 else ".g"
            first, second = tmp_path / f"a{suffix}", tmp_path / f"b{suffix}"
            write_graph(g, first)
            back = read_graph(first)
            assert back == g
            write_graph(back, second)
            assert first.read_bytes() == second.read_bytes()
