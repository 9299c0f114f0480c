import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ugig.certificate import (
    Certificate,
    Token,
    deserialize,
    encode,
    feasibility_oracle,
    is_proper,
    nest_corrupt,
    random_certificate,
    realize,
    realize_unit,
    serialize,
    size_budget_bits,
    verify,
)
from ugig.constructors import tree_rep
from ugig.errors import InconsistentCertificate, MalformedBytes, NotProper, PopulationMismatch
from ugig.formats import emit_certificate, parse_certificate
from ugig.geometry import GridRepresentation, OrthoSegment, extract_graph, validate
from ugig.graph import build_bipartite, random_tree
from fractions import Fraction as F

CROSS = GridRepresentation({"h": OrthoSegment.horizontal(0, 0), "v": OrthoSegment.vertical(F(1, 2), F(-1, 2))})


def toks(text):
    return tuple(Token.parse(w) for w in text.split())


def cert(x, y):
    return Certificate(toks(x), toks(y))


def test_encode_cross():
    c = encode(CROSS)
    assert c.lx == toks("h.L v.P h.R") and c.ly == toks("v.L h.P v.R")


def test_encode_ties_by_label():
    rep = GridRepresentation({"h1": OrthoSegment.horizontal(0, 0), "h2": OrthoSegment.horizontal(2, 0)})
    assert encode(rep).lx == toks("h1.L h1.R h2.L h2.R")


def test_verify():
    c = encode(CROSS)
    assert verify(c, build_bipartite(["h"], ["v"], [("h", "v")])).valid
    assert not verify(c, build_bipartite(["h"], ["v"], [])).valid
    with pytest.raises(PopulationMismatch):
        verify(c, build_bipartite(["h", "x"], ["v"], []))


def test_verify_trees(rng):
    for _ in range(100):
        t = random_tree(rng.randint(1, 30), rng)
        assert verify(encode(tree_rep(t)), t).valid


def test_is_proper_examples():
    ly = "h1.P h2.P"
    assert not is_proper(cert("h1.L h2.L h2.R h1.R", ly))
    assert is_proper(cert("h1.L h2.L h1.R h2.R", ly))
    assert is_proper(cert("h1.L h2.L h2.R h1.R", ly), "vertical_only")


def test_bad_axes():
    with pytest.raises(InconsistentCertificate):
        cert("h.R h.L", "h.P")
    with pytest.raises(InconsistentCertificate):
        cert("h.L h.R", "")
    with pytest.raises(InconsistentCertificate):
        Token.parse("h.Q")


def test_realize_cross():
    rep = realize_unit(encode(CROSS))
    assert validate(rep, "UGIG").valid and len(extract_graph(rep).edges) == 1


def test_realize_nested_refused():
    with pytest.raises(NotProper):
        realize_unit(cert("h1.L h2.L h2.R h1.R", "h1.P h2.P"))
    # without unit constraints the same order is fine
    assert validate(realize(cert("h1.L h2.L h2.R h1.R", "h1.P h2.P"), "none"), "GIG").valid


def test_feasibility_examples():
    assert feasibility_oracle(Certificate((), ()))
    assert feasibility_oracle(encode(CROSS))
    assert not feasibility_oracle(cert("h1.L h2.L h2.R h1.R", "h1.P h2.P"))


@given(st.integers(0, 15), st.integers(0, 15), st.integers(0, 10**6))
def test_round_trip_and_oracle(nh, nv, seed):
    rng = random.Random(seed)
    c = random_certificate(nh, nv, rng)
    rep = realize_unit(c)
    assert validate(rep, "UGIG").valid
    assert encode(rep) == c
    assert feasibility_oracle(c)
    assert extract_graph(rep) == c.implied_graph()


@given(st.integers(2, 12), st.integers(2, 12), st.integers(0, 10**6))
def test_nested_is_infeasible(nh, nv, seed):
    rng = random.Random(seed)
    bad = nest_corrupt(random_certificate(nh, nv, rng), rng)
    assert not is_proper(bad) and not feasibility_oracle(bad)
    with pytest.raises(NotProper):
        realize_unit(bad)


@pytest.mark.parametrize("mode", ["horizontal_only", "vertical_only", "none"])
def test_partial_modes(mode, rng):
    for _ in range(50):
        c = random_certificate(rng.randint(1, 8), rng.randint(1, 8), rng, proper=False)
        if not is_proper(c, mode):
            continue
        rep = realize(c, mode)
        cls = {"horizontal_only": "USEG_H", "vertical_only": "USEG_V", "none": "GIG"}[mode]
        assert validate(rep, cls).valid and encode(rep) == c


def test_binary_round_trip(rng):
    c = encode(CROSS)
    assert deserialize(serialize(c)) == c
    for n in (1, 10, 100, 1000):
        c = random_certificate(n // 2, n - n // 2, rng)
        data = serialize(c)
        assert deserialize(data) == c
        if n >= 100:  # the fixed header dominates tiny instances
            assert 8 * len(data) <= size_budget_bits(n)


def test_truncated_bytes():
    data = serialize(encode(CROSS))
    for cut in range(len(data)):
        with pytest.raises(MalformedBytes):
            deserialize(data[:cut])
    with pytest.raises(MalformedBytes):
        deserialize(b"XXXX" + data[4:])


def test_text_round_trip(rng):
    c = random_certificate(5, 6, rng)
    assert parse_certificate(emit_certificate(c)) == c
    assert Certificate.from_text(c.to_text()) == c
