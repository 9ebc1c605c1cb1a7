import pytest

from strongdom import (
    InvalidParameter,
    VertexSumSpec,
    check_hajos_bounds,
    check_vsum_bounds,
    forced_vertices,
    gamma_st_bruteforce,
    gamma_st_exact,
    hajos_sum,
    vertex_sum,
)
from strongdom.families import (
    TIGHT_SIDE,
    Family,
    FamilyParams,
    HajosLowerSide,
    figure1_instance,
    hajos_lower_literal,
    vsum_lower_literal_part,
    hajos_lower_family,
    hajos_upper_family,
    hajos_upper_part,
    vsum_lower_family,
    vsum_lower_part,
    vsum_upper_family,
    vsum_upper_part,
)


def test_hajos_upper_part():
    g = hajos_upper_part()
    assert (g.n, g.m) == (8, 10)
    assert g.labels[:2] == ("x", "y")
    assert g.has_edge(0, 1)
    assert gamma_st_bruteforce(g).optimum == 3


def test_hajos_upper_family_tight():
    spec = hajos_upper_family()
    g3 = hajos_sum(spec).graph
    assert g3.n == 15
    assert gamma_st_bruteforce(g3).optimum == 7
    r = check_hajos_bounds(spec)
    assert r.parts_gamma == (3, 3) and r.exact == r.upper == 7


def test_vsum_upper_part():
    g = vsum_upper_part()
    assert (g.n, g.m) == (7, 6)
    assert g.degree[0] == 2
    assert gamma_st_bruteforce(g).optimum == 2


@pytest.mark.parametrize("k, expected", [(2, 5), (3, 7), (4, 9)])
def test_vsum_upper_family_tight(k, expected):
    r = check_vsum_bounds(vsum_upper_family(k))
    assert r.exact == r.upper == expected


def test_vsum_lower_part_counts():
    g = vsum_lower_part(2, 2)
    assert (g.n, g.m) == (11, 10)
    assert gamma_st_exact(g).optimum == 6


def test_vsum_lower_literal_part():
    g = vsum_lower_literal_part()
    assert (g.n, g.m) == (28, 27)
    assert g.degree[0] == 3
    assert gamma_st_exact(g).optimum == 15


@pytest.mark.parametrize("k, h, m", [(2, 2, 2), (3, 2, 2), (2, 3, 4), (3, 2, 3)])
def test_vsum_lower_family_tight(k, h, m):
    r = check_vsum_bounds(vsum_lower_family(k, h, m))
    assert r.exact == r.lower
    assert r.degrees == (h,) * k


def test_vsum_lower_boundary_is_still_tight():
    # h*k == m + 1 is rejected by the generator, yet the bound is attained there too
    part = vsum_lower_part(2, 3)
    r = check_vsum_bounds(VertexSumSpec([(part, 0), (part, 0)]))
    assert r.exact == r.lower == 13


def test_vsum_lower_small_fusion_by_oracle():
    f = vertex_sum(vsum_lower_family(2, 2, 2))
    assert f.graph.n == 21
    assert gamma_st_bruteforce(f.graph).optimum == 9


def test_lower_family_hubs_are_forced_in_parts():
    g = vsum_lower_part(2, 3)
    hubs = {g.vertex_by_label(f"h{i}") for i in (1, 2)}
    assert hubs <= forced_vertices(g)
    # after fusion the centre outranks the hubs, so they are no longer forced
    f = vertex_sum(vsum_lower_family(3, 2, 3))
    assert f.map_set(0, hubs).isdisjoint(forced_vertices(f.graph))


def test_hajos_lower_smallest():
    spec = hajos_lower_family()
    assert spec.g1.n == 20
    r = check_hajos_bounds(spec)
    assert r.exact == r.lower == 18
    assert hajos_sum(spec).graph.n == 39


def test_hajos_lower_literal():
    spec = hajos_lower_literal()
    r = check_hajos_bounds(spec)
    assert r.parts_gamma == (14, 20) and r.degrees == (3, 4)
    assert r.exact == r.lower == 29


@pytest.mark.parametrize(
    "sides",
    [
        (HajosLowerSide(2, 2, 2),),
        (HajosLowerSide(1, 3, 2), HajosLowerSide(1, 3, 2)),
        (HajosLowerSide(2, 3, 1),),
        (HajosLowerSide(2, 5, 2),),
    ],
)
def test_hajos_lower_parameter_errors(sides):
    with pytest.raises(InvalidParameter):
        hajos_lower_family(*sides)


@pytest.mark.parametrize("args", [(1, 2, 2), (2, 1, 2), (2, 3, 2), (2, 2, 3)])
def test_vsum_lower_parameter_errors(args):
    with pytest.raises(InvalidParameter):
        vsum_lower_family(*args)


def test_vsum_upper_needs_two_parts():
    with pytest.raises(InvalidParameter):
        vsum_upper_family(1)


@pytest.mark.parametrize("family", list(Family))
def test_registry_matches_tight_side(family):
    spec = FamilyParams(family).build()
    r = check_hajos_bounds(spec) if family in (Family.FIGURE1, Family.HAJOS_LOWER, Family.HAJOS_UPPER) else check_vsum_bounds(spec)
    assert r.holds
    side = TIGHT_SIDE[family]
    if side:
        assert r.tight in (side, "both")


def test_registry_parameters():
    spec = FamilyParams(Family.VSUM_UPPER, k=3).build()
    assert spec.k == 3
    spec = FamilyParams(Family.VSUM_LOWER, k=3, h=2, m=3).build()
    assert spec.k == 3 and spec.graphs[0].n == 1 + 2 * (1 + 2 * 3)
    spec = FamilyParams(Family.HAJOS_LOWER, h=3, m=4).build()
    assert spec.g1.degree[0] == 4


def test_k6_c6_parts():
    spec = figure1_instance()
    assert spec.g1.labels[0] == "a0" and spec.g2.labels[0] == "b0"
    assert (spec.g1.m, spec.g2.m) == (15, 6)
