import sys
import xml.etree.ElementTree as ET
from importlib import resources

import pytest

from ugig.cli import BUDGET, NEGATIVE, OK, USAGE, run
from ugig.formats import parse_graph
from ugig.graph import cycle

DATA = resources.files("ugig.data") / "reduction"
SHIM = f"{sys.executable} -m ugig.recognizer.dimacs_solver"


def test_construct_then_validate(tmp_path, capsys):
    rep = tmp_path / "c14.txt"
    assert run(["construct", "cycle", "--n", "14", "--layout", "rectangle", "--eps", "1/2", "--out", str(rep)]) == OK
    assert run(["validate", str(rep), "--class", "ugig"]) == OK
    assert run(["extract", str(rep), "--out", str(tmp_path / "g.txt")]) == OK
    assert parse_graph((tmp_path / "g.txt").read_text()) == cycle(14)


def test_validate_negative(tmp_path, capsys):
    rep = tmp_path / "s.txt"
    assert run(["construct", "fixture", "--name", "s_graph_useg", "--out", str(rep)]) == OK
    assert run(["validate", str(rep), "--class", "ugig"]) == NEGATIVE
    assert "NonUnitLength" in capsys.readouterr().out
    assert run(["validate", str(rep), "--class", "useg"]) == OK


def test_recognize_c14_org_external(capsys, monkeypatch):
    monkeypatch.setenv("UGIG_SOLVER", SHIM)
    assert run(["recognize", "gen:cycle:14", "--class", "org", "--engine", "sat"]) == NEGATIVE
    out = capsys.readouterr().out
    assert "non_member" in out and " R " not in out and "X:" not in out


def test_recognize_member_prints_witness(capsys, tmp_path):
    cnf = tmp_path / "q.cnf"
    assert run(["recognize", "gen:cycle:8", "--class", "ugig", "--export-cnf", str(cnf)]) == OK
    out = capsys.readouterr().out
    assert "verdict: member" in out and "X:" in out
    assert cnf.read_text().startswith("p cnf")
    assert (tmp_path / "q.cnf.map").exists()


def test_recognize_budget(capsys):
    assert run(["recognize", "gen:cycle:12", "--class", "org", "--engine", "backtrack", "--budget", "0.0001"]) == BUDGET


def test_certify_realize_canonicalize(tmp_path, capsys):
    rep = tmp_path / "t.txt"
    assert run(["construct", "tree", "--n", "12", "--seed", "3", "--out", str(rep)]) == OK
    cert = tmp_path / "t.cert"
    assert run(["certify", str(rep), "--binary", str(tmp_path / "t.bin"), "--out", str(cert)]) == OK
    back = tmp_path / "back.txt"
    assert run(["realize", str(cert), "--out", str(back)]) == OK
    assert run(["validate", str(back)]) == OK
    assert run(["canonicalize", str(back), "--out", str(tmp_path / "can.txt")]) == OK
    assert run(["validate", str(tmp_path / "can.txt")]) == OK


def test_reduce(tmp_path, capsys):
    out, roles = tmp_path / "g.txt", tmp_path / "roles.txt"
    code = run(["reduce", str(DATA / "cube.cnf"), str(DATA / "cube.emb"), "--girth", "8", "--out", str(out), "--roles", str(roles)])
    assert code == OK
    g = parse_graph(out.read_text())
    assert len(roles.read_text().splitlines()) == len(g)
    assert run(["reduce", str(DATA / "k33.cnf"), str(DATA / "k33.emb")]) == NEGATIVE
    assert "NonPlanar" in capsys.readouterr().err


def test_render(tmp_path, capsys):
    rep = tmp_path / "c.txt"
    run(["construct", "cycle", "--n", "12", "--layout", "square", "--out", str(rep)])
    svg = tmp_path / "c.svg"
    assert run(["render", str(rep), "--out", str(svg)]) == OK
    assert len(ET.fromstring(svg.read_text()).findall("{http://www.w3.org/2000/svg}line")) == 12


@pytest.mark.parametrize(
    "argv",
    [["bogus"], [], ["validate"], ["recognize", "gen:nope"], ["validate", "/no/such/file"], ["construct", "fixture", "--name", "x"]],
)
def test_usage_errors(argv, capsys):
    assert run(argv) == USAGE


def test_square_too_small(capsys):
    assert run(["construct", "cycle", "--n", "14", "--layout", "square"]) == NEGATIVE
