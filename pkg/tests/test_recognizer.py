import sys
from math import comb

import pytest
from hypothesis import given, settings

from ugig.errors import BadParams, CapExceeded, InconsistentModel
from ugig.geometry import extract_graph, extract_graph_rays, validate
from ugig.graph import build_bipartite, cycle, k33_plus_paths, random_tree, star
from ugig.recognizer import (
    MEMBER,
    NON_MEMBER,
    TIMEOUT,
    RecognitionQuery,
    cross_free_search,
    decode_model,
    expected_clause_count,
    has_cross,
    recognize,
    sat_encode,
    witness_ok,
)
from ugig.recognizer.classes import CHAIN, CLASS_NAMES, normalize_class
from ugig.recognizer.crossfree import adjacency_matrix
from ugig.recognizer.sat import parse_solver_output, solve

from conftest import bipartite_graphs

K2 = build_bipartite(["h"], ["v"], [("h", "v")])
SHIM = f"{sys.executable} -m ugig.recognizer.dimacs_solver"


def test_class_names():
    assert normalize_class("2-dorg") == "2DORG"
    assert normalize_class("ugig") == "UGIG"
    assert set(CHAIN) == set(CLASS_NAMES)
    with pytest.raises(BadParams):
        normalize_class("pseg")


@pytest.mark.parametrize("cls", CLASS_NAMES)
def test_k2_member_everywhere(cls):
    res = recognize(graph=K2, cls=cls)
    assert res.verdict == MEMBER and witness_ok(K2, res)


def test_k2_ugig_model_is_unit_cross():
    enc = sat_encode(K2, "UGIG")
    rep = recognize(graph=K2, cls="UGIG").representation
    assert validate(rep, "UGIG").valid and len(extract_graph(rep).edges) == 1
    assert solve(enc) is not None


@pytest.mark.parametrize("cls", CLASS_NAMES)
@pytest.mark.parametrize("g", [K2, cycle(6), star(4), k33_plus_paths()])
def test_clause_count_closed_form(g, cls):
    assert len(sat_encode(g, cls).clauses) == expected_clause_count(g, cls)


def test_clause_count_is_cubic():
    # token counts t = 3n on each axis for the cycle on 2n vertices: 2*C(t,3) per axis dominates
    for length in (8, 16, 32):
        g = cycle(length)
        t = 3 * length // 2
        measured = len(sat_encode(g, "GIG").clauses)
        assert 4 * comb(t, 3) <= measured <= 2 * 4 * comb(t, 3)


def test_c14_not_org_external_solver():
    res = recognize(graph=cycle(14), cls="ORG", solver_cmd=SHIM)
    assert res.verdict == NON_MEMBER and res.representation is None


def test_c12_org_model_decodes():
    res = recognize(graph=cycle(12), cls="ORG")
    assert res.verdict == MEMBER
    assert extract_graph_rays(res.representation) == cycle(12)


def test_corrupted_model():
    enc = sat_encode(K2, "GIG")
    # x axis holds three tokens; make their order cyclic
    v01, v12, v02 = (enc.order_vars[("x", i, j)] for i, j in ((0, 1), (1, 2), (0, 2)))
    model = [v01, v12, -v02]
    with pytest.raises(InconsistentModel):
        decode_model(enc, model)


def test_solver_transcripts():
    assert parse_solver_output("c hi\ns UNSATISFIABLE\n") is None
    assert parse_solver_output("s SATISFIABLE\nv 1 -2\nv 3 0\n") == [1, -2, 3]
    with pytest.raises(InconsistentModel):
        parse_solver_output("c nothing\n")


def test_cross_free_examples():
    k33 = build_bipartite(["a1", "a2", "a3"], ["b1", "b2", "b3"], [(f"a{i}", f"b{j}") for i in (1, 2, 3) for j in (1, 2, 3)])
    assert cross_free_search(k33) is not None
    rows, cols = cross_free_search(k33_plus_paths())
    assert not has_cross(adjacency_matrix(k33_plus_paths(), rows, cols))
    assert has_cross([[0, 1, 0], [1, 0, 1], [0, 1, 0]])
    with pytest.raises(CapExceeded):
        cross_free_search(cycle(20))


def test_random_5x5_cross_free_agrees(rng):
    for _ in range(40):
        hs = [f"h{i}" for i in range(5)]
        vs = [f"v{j}" for j in range(5)]
        g = build_bipartite(hs, vs, [(h, v) for h in hs for v in vs if rng.random() < 0.5])
        gig = recognize(graph=g, cls="GIG", engine="backtrack").verdict == MEMBER
        assert (cross_free_search(g) is not None) == gig


def test_trees_are_ugig(rng):
    for _ in range(15):
        t = random_tree(rng.randint(1, 8), rng)
        res = recognize(graph=t, cls="UGIG")
        assert res.verdict == MEMBER and witness_ok(t, res)


@settings(max_examples=25)
@given(bipartite_graphs(max_side=3))
@pytest.mark.parametrize("cls", ["GIG", "UGIG", "USEG", "ORG", "2DORG"])
def test_engines_agree(cls, g):
    a = recognize(graph=g, cls=cls, engine="sat")
    b = recognize(graph=g, cls=cls, engine="backtrack")
    assert a.verdict == b.verdict


def test_chain_monotone_on_cycles():
    # a member of a class is a member of every class after it in the chain
    for length in (8, 10):
        verdicts = [recognize(graph=cycle(length), cls=c).verdict == MEMBER for c in CHAIN]
        first = verdicts.index(True) if True in verdicts else len(verdicts)
        assert all(verdicts[first:])


def test_budget_timeout():
    res = recognize(graph=cycle(12), cls="ORG", engine="backtrack", budget=1e-4)
    assert res.verdict == TIMEOUT and res.representation is None


def test_query_validation():
    with pytest.raises(BadParams):
        RecognitionQuery(K2, "UGIG", engine="magic")
    with pytest.raises(BadParams):
        RecognitionQuery(K2, "UGIG", budget=0)
    with pytest.raises(CapExceeded):
        recognize(graph=cycle(20), cls="GIG", engine="backtrack")
