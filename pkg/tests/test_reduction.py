from importlib import resources

import pytest

from ugig.errors import AlreadyFourOccurrences, BadGirth, InvalidInstance
from ugig.formats import emit_embedding, emit_formula, emit_roles, parse_embedding, parse_formula, parse_roles
from ugig.graph import girth, girth_bruteforce
from ugig.reduction import (
    ROLES,
    CnfFormula,
    RotationSystem,
    build_clause_gadget,
    build_occurrence,
    build_variable_gadget,
    compile_instance,
    validate_instance,
)

DATA = resources.files("ugig.data") / "reduction"


def load(name):
    return parse_formula((DATA / f"{name}.cnf").read_text()), parse_embedding((DATA / f"{name}.emb").read_text())


def test_fixture_files_round_trip():
    for name in ("cube", "rhombic_dodecahedron", "low_occurrence", "k33"):
        f, r = load(name)
        assert parse_formula(emit_formula(f)) == f
        assert parse_embedding(emit_embedding(r)) == r


def test_valid_fixture_is_clean():
    f, r = load("cube")
    assert validate_instance(f, r).valid
    # Euler: 8 - 12 + 6 = 2
    assert len(r.faces()) == 6


@pytest.mark.parametrize(
    "name,kind", [("rhombic_dodecahedron", "ClauseSize"), ("low_occurrence", "OccurrenceCount"), ("k33", "NonPlanar")]
)
def test_corrupted_fixtures(name, kind):
    assert kind in validate_instance(*load(name)).kinds()


def test_single_occurrence():
    f = CnfFormula(1, [[1]])
    r = RotationSystem({"x1": ("c1",), "c1": ("x1",)})
    assert "OccurrenceCount" in validate_instance(f, r).kinds()


def test_rotation_mismatch():
    f, r = load("cube")
    rot = dict(r.rotation)
    rot["x1"] = rot["x1"][:-1]
    assert "RotationMismatch" in validate_instance(f, RotationSystem(rot)).kinds()


def test_non_planar_rotation_of_planar_graph():
    f, r = load("cube")
    rot = dict(r.rotation)
    a, b, c = rot["x1"]
    rot["x1"] = (b, a, c)  # reversing one vertex's order breaks the embedding
    assert "NonPlanar" in validate_instance(f, RotationSystem(rot)).kinds()


@pytest.mark.parametrize("k", [4, 8, 12])
def test_clause_gadget(k):
    gg = build_clause_gadget(k)
    assert girth(gg.graph) >= k
    assert len(gg.ports) == 6
    assert {name[0] for name in gg.ports} == {"L", "T", "R"}
    assert gg.graph.is_connected()


def test_bad_girth():
    for fn in (build_clause_gadget, build_occurrence):
        with pytest.raises(BadGirth):
            fn(3)


def test_variable_gadget():
    gg = build_variable_gadget()
    assert len(gg.graph) == 2 and len(gg.graph.edges) == 1
    assert sorted(gg.roles.values()) == ["variable_a", "variable_b"]


def test_occurrence_paths():
    gg = build_occurrence(6)
    g = gg.graph
    assert len(g.edges) == 12 and len(g) == 14
    assert not g.is_connected()
    assert all(r == "occurrence_path" for r in gg.roles.values())


@pytest.mark.parametrize("k", [4, 8, 12])
def test_compile_fixture(k):
    f, r = load("cube")
    gg = compile_instance(f, r, k)
    g = gg.graph
    assert girth(g) >= k
    assert g.is_connected()
    assert gg.meta["predicted_vertices"] == len(g)
    assert set(gg.roles) == g.vertices and set(gg.roles.values()) <= set(ROLES)
    assert not gg.ports and not gg.capped_ports and len(gg.used_ports) == 6 * len(f.clauses)
    # each variable ends with four occurrences: a and b get one path each per occurrence
    for v in range(1, f.nvars + 1):
        assert g.degree(f"x{v}.a") == 5 and g.degree(f"x{v}.b") == 5
    assert len(gg.meta["dummies"]) == 4


def test_girth_oracles_agree_on_compiled():
    f, r = load("cube")
    g = compile_instance(f, r, 4).graph
    assert girth(g) == girth_bruteforce(g)


def test_vertex_count_linear_in_k():
    f, r = load("cube")
    sizes = [len(compile_instance(f, r, k).graph) for k in (4, 8, 12, 16)]
    steps = {b - a for a, b in zip(sizes, sizes[1:])}
    assert len(steps) == 1


def test_dummy_already_four():
    from ugig.reduction import _compile_once, add_dummy_occurrence, jigsaw_length

    f, r = load("cube")
    gg = _compile_once(f, r, 6, jigsaw_length(6), 6)
    add_dummy_occurrence(gg, 1, 0, 6)
    assert gg.meta["occurrences"][1] == 4
    assert girth(gg.graph) >= 6
    with pytest.raises(AlreadyFourOccurrences):
        add_dummy_occurrence(gg, 1, 0, 6)


def test_compile_rejects_invalid():
    with pytest.raises(InvalidInstance):
        compile_instance(*load("k33"), 4)


def test_roles_sidecar_round_trip():
    gg = compile_instance(*load("cube"), 4)
    assert parse_roles(emit_roles(gg.roles)) == gg.roles
