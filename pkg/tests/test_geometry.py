import random
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ugig.constructors import cycle_rep, square_cycle_rays
from ugig.convert import (
    clip_rays_to_unit,
    corner_embed,
    eps_square_to_org,
    org_to_eps_square,
    separates,
    separating_edges,
)
from ugig.errors import BadEpsilon, CollinearOverlap, NotTwoDirectional
from ugig.formats import emit_representation, parse_representation
from ugig.geometry import (
    GridRepresentation,
    OrthoRay,
    OrthoSegment,
    RayRepresentation,
    boundary_size,
    bounding_box,
    extract_graph,
    extract_graph_bruteforce,
    extract_graph_rays,
    intersects,
    validate,
)
from ugig.graph import build_bipartite, cycle

from conftest import random_rays, random_unit_rep

H = OrthoSegment.horizontal
V = OrthoSegment.vertical
CROSS = GridRepresentation({"h": H(0, 0), "v": V(F(1, 2), F(-1, 2))})


def test_floats_refused():
    with pytest.raises(TypeError):
        H(0.5, 0)


def test_intersects_examples():
    assert intersects(H(0, 0), V(F(1, 2), F(-1, 2)))
    assert not intersects(H(0, 0), V(2, 0))
    with pytest.raises(CollinearOverlap):
        intersects(H(0, 0), H(F(1, 2), 0))
    # endpoints touching count as an intersection
    assert intersects(H(0, 0), V(1, 0))


def test_extract_cross_and_empty():
    assert extract_graph(CROSS) == build_bipartite(["h"], ["v"], [("h", "v")])
    assert len(extract_graph(GridRepresentation({}))) == 0


def test_extract_cycle_rep():
    assert extract_graph(cycle_rep(8)) == cycle(8)


@given(st.integers(1, 25), st.integers(0, 10**6))
def test_sweep_matches_bruteforce(n, seed):
    rep = random_unit_rep(n, random.Random(seed))
    assert extract_graph(rep) == extract_graph_bruteforce(rep)


def test_validate_classes():
    assert validate(CROSS, "UGIG").valid
    rep = GridRepresentation({"h": OrthoSegment.horizontal(0, 0, 2), "v": V(1, F(-1, 2)), "w": V(F(3, 2), F(-1, 2))})
    assert validate(rep, "UGIG").kinds() == {"NonUnitLength"}
    assert validate(rep, "USEG_V").valid
    assert not validate(rep, "USEG_H").valid
    assert validate(rep, "GIG").valid


def test_validate_reports_collinear_contact():
    rep = GridRepresentation({"a": H(0, 0), "b": H(1, 0)})
    assert "CollinearContact" in validate(rep, "GIG").kinds()


def test_boundary_sizes():
    assert boundary_size(GridRepresentation({"h": H(0, 0)})) == 1
    assert boundary_size(CROSS) == 2
    assert boundary_size(cycle_rep(14, "rectangle", F(1, 2))) <= 4


def test_ray_examples():
    up = OrthoRay("U", F(0), F(0))
    assert len(extract_graph_rays(RayRepresentation({"u": up, "r": OrthoRay("R", F(-1), F(1))})).edges) == 1
    assert not extract_graph_rays(RayRepresentation({"u": up, "r": OrthoRay("R", F(1), F(-1))})).edges


def test_c12_ray_layout():
    rays = square_cycle_rays(12)
    assert extract_graph_rays(rays).same_graph(cycle(12))


def test_clip_examples():
    cross = RayRepresentation({"u": OrthoRay("U", F(0), F(0)), "r": OrthoRay("R", F(-1), F(1))})
    rep = clip_rays_to_unit(cross)
    assert validate(rep, "UGIG").valid and len(extract_graph(rep).edges) == 1
    apart = RayRepresentation({"a": OrthoRay("R", F(0), F(0)), "b": OrthoRay("U", F(-1), F(1))})
    assert not extract_graph(clip_rays_to_unit(apart)).edges
    rays = square_cycle_rays(12)
    clipped = clip_rays_to_unit(rays)
    assert validate(clipped, "UGIG").valid
    assert extract_graph(clipped).same_graph(cycle(12))


def test_separation_examples():
    rays = RayRepresentation({
        "u": OrthoRay("U", F(0), F(-1)), "r": OrthoRay("R", F(-1), F(0)),
        "p": OrthoRay("R", F(5), F(5)), "q": OrthoRay("L", F(-5), F(-5)), "s": OrthoRay("L", F(-6), F(-6)),
    })
    assert separates(rays, ("r", "u"), "p", "q")
    assert not separates(rays, ("r", "u"), "q", "s")


def test_c12_separating_edges_regression():
    # a C_12 layout exists, so it is measured rather than predicted
    assert separating_edges(square_cycle_rays(12)) == []


def test_eps_square_case_formula():
    rays = RayRepresentation({"h": OrthoRay("R", F(1, 10), F(1, 10)), "v": OrthoRay("U", F(2, 10), F(1, 20))})
    assert len(extract_graph_rays(rays).edges) == 1
    rep = org_to_eps_square(rays, F(1, 2))
    assert len(extract_graph(rep).edges) == 1


def _inside_open_square(rep, eps):
    box = bounding_box(rep)
    return box.strictly_inside(0, 0, 1 + eps, 1 + eps)


@pytest.mark.parametrize("eps", [F(1, 2), F(1, 10)])
def test_eps_square_c12(eps):
    rep = org_to_eps_square(square_cycle_rays(12), eps)
    assert _inside_open_square(rep, eps)
    assert validate(rep, "UGIG").valid and extract_graph(rep).same_graph(cycle(12))
    back = eps_square_to_org(rep, eps)
    assert extract_graph_rays(back).same_graph(cycle(12))


def test_eps_square_single_ray():
    rep = org_to_eps_square(RayRepresentation({"a": OrthoRay("D", F(3), F(3))}), F(1, 2))
    assert len(rep) == 1 and _inside_open_square(rep, F(1, 2))
    assert len(eps_square_to_org(GridRepresentation({"a": H(F(1, 4), F(1, 3))}), F(1, 2))) == 1


def test_bad_eps():
    with pytest.raises(BadEpsilon):
        org_to_eps_square(square_cycle_rays(4), F(1))


@given(st.integers(1, 14), st.integers(0, 10**6), st.sampled_from([F(1, 2), F(1, 5)]))
def test_square_round_trip_random(n, seed, eps):
    rays = random_rays(n, random.Random(seed))
    g = extract_graph_rays(rays)
    rep = org_to_eps_square(rays, eps)
    assert _inside_open_square(rep, eps) and validate(rep, "UGIG").valid
    assert extract_graph(rep) == g
    assert extract_graph_rays(eps_square_to_org(rep, eps)) == g


def test_corner_embed():
    cross = RayRepresentation({"a": OrthoRay("R", F(0), F(1)), "b": OrthoRay("U", F(1), F(0))})
    rep = corner_embed(cross, F(1, 2))
    assert validate(rep, "UGIG").valid and len(extract_graph(rep).edges) == 1
    # P_4 as a two-direction layout
    p4 = RayRepresentation({
        "a": OrthoRay("R", F(0), F(0)), "b": OrthoRay("U", F(1), F(-1)),
        "c": OrthoRay("R", F(0), F(2)), "d": OrthoRay("U", F(2), F(1)),
    })
    g = extract_graph_rays(p4)
    assert len(g.edges) == 3 and g.is_tree()
    assert extract_graph(corner_embed(p4, F(1, 3))) == g
    with pytest.raises(NotTwoDirectional):
        corner_embed(RayRepresentation({"a": OrthoRay("L", F(0), F(0))}), F(1, 2))


@given(st.integers(1, 12), st.integers(0, 10**6))
def test_representation_text_round_trip(n, seed):
    rng = random.Random(seed)
    rep = random_unit_rep(n, rng)
    assert parse_representation(emit_representation(rep)) == rep
    rays = random_rays(n, rng)
    assert parse_representation(emit_representation(rays)) == rays
