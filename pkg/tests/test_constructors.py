import random
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ugig.constructors import FIXTURES, cycle_rep, fixture_info, fixture_rep, square_cycle_rays, tree_rep
from ugig.errors import BadParams, NotATree, SquareTooSmall
from ugig.geometry import bounding_box, extract_graph, extract_graph_rays, validate
from ugig.graph import build_bipartite, cycle, k33_plus_paths, random_tree, s_graph, star, t_family


def _fits_open(rep, w, h):
    return bounding_box(rep).strictly_inside(0, 0, w, h)


@pytest.mark.parametrize("eps", [F(1, 2), F(1, 5), F(9, 10)])
@pytest.mark.parametrize("length", [4, 6, 14, 20, 40])
def test_rectangle_cycles(length, eps):
    rep = cycle_rep(length, "rectangle", eps)
    assert extract_graph(rep) == cycle(length)
    assert validate(rep, "UGIG").valid
    box = bounding_box(rep)
    assert box.width <= 2 + eps and box.height <= 1 + eps


@pytest.mark.parametrize("length", [4, 6, 8, 10, 12])
def test_square_cycles(length):
    eps = F(1, 2)
    rep = cycle_rep(length, "square", eps)
    assert extract_graph(rep) == cycle(length)
    assert validate(rep, "UGIG").valid
    assert _fits_open(rep, 1 + eps, 1 + eps)
    assert extract_graph_rays(square_cycle_rays(length)).same_graph(cycle(length))


def test_c14_does_not_fit_square():
    with pytest.raises(SquareTooSmall):
        cycle_rep(14, "square")


def test_cycle_params():
    with pytest.raises(BadParams):
        cycle_rep(7)
    with pytest.raises(BadParams):
        cycle_rep(8, eps=F(1))
    with pytest.raises(BadParams):
        cycle_rep(8, layout="hexagon")


def test_path5():
    p5 = build_bipartite(["a", "c", "e"], ["b", "d"], [("a", "b"), ("c", "b"), ("c", "d"), ("e", "d")])
    rep = tree_rep(p5)
    assert validate(rep, "UGIG").valid and extract_graph(rep) == p5


def test_star16():
    rep = tree_rep(star(16))
    assert len(rep) == 17 and extract_graph(rep) == star(16)
    assert "0" in rep.segments  # the root keeps its label
    fixed = [s.x if s.orientation == "V" else s.y for k, s in rep.segments.items() if k != "0"]
    assert len(set(fixed)) == 16


def test_tree_rep_refuses_cycles():
    with pytest.raises(NotATree):
        tree_rep(cycle(6))


@given(st.integers(1, 120), st.integers(0, 10**6))
def test_random_trees(n, seed):
    t = random_tree(n, random.Random(seed))
    rep = tree_rep(t)
    assert validate(rep, "UGIG").valid and extract_graph(rep) == t


def test_t_family_3():
    t = t_family(3)
    rep = tree_rep(t)
    assert len(rep) == 883
    assert validate(rep, "UGIG").valid and extract_graph(rep) == t


def test_fixtures():
    assert set(FIXTURES) >= {"s_graph_useg", "k33_gig"}
    s = fixture_rep("s_graph_useg")
    assert validate(s, "USEG_V").valid or validate(s, "USEG_H").valid
    assert "NonUnitLength" in validate(s, "UGIG").kinds()
    assert extract_graph(s) == s_graph()
    k = fixture_rep("k33_gig")
    assert validate(k, "GIG").valid and extract_graph(k) == k33_plus_paths()
    for name in FIXTURES:
        info = fixture_info(name)
        assert info["provenance"]
        rep = fixture_rep(name)
        cls = info["class"]
        if cls == "USEG":
            assert validate(rep, "USEG_H").valid or validate(rep, "USEG_V").valid
        else:
            assert validate(rep, cls).valid
    with pytest.raises(BadParams):
        fixture_rep("nope")
