"""CNF model of the certificate space and the solver plumbing around it."""

from __future__ import annotations

import os
import shlex
import subprocess
import tempfile
import threading
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from ..certificate import Certificate, Token
from ..errors import BudgetExceeded, InconsistentModel
from ..geometry import OrthoRay, RayRepresentation
from ..graph import BipartiteGraph
from .classes import is_ray_class, normalize_class

DEFAULT_SOLVER = "glucose4"


@dataclass
class Encoding:
    cls: str
    graph: BipartiteGraph
    tokens: dict  # axis -> list of tokens (Token, or vertex label for ray classes)
    order_vars: dict = field(default_factory=dict)  # (axis, i, j) with i < j -> var
    dir_vars: dict = field(default_factory=dict)  # vertex -> var (true = R or U)
    selector: int = 0  # USEG: true = horizontal side unit
    clauses: list = field(default_factory=list)
    nvars: int = 0

    def new_var(self) -> int:
        self.nvars += 1
        return self.nvars

    def before(self, axis, a, b) -> int:
        """Literal for ``a`` preceding ``b`` on ``axis``."""
        idx = self.index[axis]
        i, j = idx[a], idx[b]
        if i < j:
            return self.order_vars[(axis, i, j)]
        return -self.order_vars[(axis, j, i)]

    def __post_init__(self):
        self.index = {ax: {t: i for i, t in enumerate(ts)} for ax, ts in self.tokens.items()}

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.nvars} {len(self.clauses)}"]
        lines += [" ".join(map(str, c)) + " 0" for c in self.clauses]
        return "\n".join(lines) + "\n"

    def varmap_text(self) -> str:
        rows = [f"c class {self.cls}"]
        for (axis, i, j), var in sorted(self.order_vars.items(), key=lambda kv: kv[1]):
            a, b = self.tokens[axis][i], self.tokens[axis][j]
            rows.append(f"{var} order {axis} {_tok_str(a)} {_tok_str(b)}")
        for v, var in sorted(self.dir_vars.items(), key=lambda kv: kv[1]):
            rows.append(f"{var} direction {v}")
        if self.selector:
            rows.append(f"{self.selector} unit_side horizontal")
        return "\n".join(rows) + "\n"


def _tok_str(t) -> str:
    return str(t)


def _order_block(enc: Encoding, axis: str):
    t = len(enc.tokens[axis])
    for i, j in combinations(range(t), 2):
        enc.order_vars[(axis, i, j)] = enc.new_var()
    for i, j, k in combinations(range(t), 3):
        a = enc.order_vars[(axis, i, j)]
        b = enc.order_vars[(axis, j, k)]
        c = enc.order_vars[(axis, i, k)]
        enc.clauses.append([-a, -b, c])
        enc.clauses.append([a, b, -c])


def _proper_block(enc: Encoding, axis: str, owners, guard=None):
    """Left ends and right ends of ``owners`` come in the same order."""
    pre = [] if guard is None else [guard]
    for p, q in combinations(owners, 2):
        a = enc.before(axis, Token(p, "L"), Token(q, "L"))
        b = enc.before(axis, Token(p, "R"), Token(q, "R"))
        enc.clauses.append(pre + [-a, b])
        enc.clauses.append(pre + [a, -b])


def _segment_encoding(g: BipartiteGraph, cls: str) -> Encoding:
    hs, vs = g.sorted_h(), g.sorted_v()
    tx = [Token(h, k) for h in hs for k in "LR"] + [Token(v, "P") for v in vs]
    ty = [Token(v, k) for v in vs for k in "LR"] + [Token(h, "P") for h in hs]
    enc = Encoding(cls, g, {"x": tx, "y": ty})
    _order_block(enc, "x")
    _order_block(enc, "y")
    for h in hs:
        enc.clauses.append([enc.before("x", Token(h, "L"), Token(h, "R"))])
    for v in vs:
        enc.clauses.append([enc.before("y", Token(v, "L"), Token(v, "R"))])
    for h in hs:
        for v in vs:
            lits = [
                enc.before("x", Token(h, "L"), Token(v, "P")),
                enc.before("x", Token(v, "P"), Token(h, "R")),
                enc.before("y", Token(v, "L"), Token(h, "P")),
                enc.before("y", Token(h, "P"), Token(v, "R")),
            ]
            if g.has_edge(h, v):
                enc.clauses += [[lit] for lit in lits]
            else:
                enc.clauses.append([-lit for lit in lits])
    if cls == "UGIG":
        _proper_block(enc, "x", hs)
        _proper_block(enc, "y", vs)
    elif cls == "USEG":
        enc.selector = enc.new_var()
        _proper_block(enc, "x", hs, -enc.selector)
        _proper_block(enc, "y", vs, enc.selector)
    return enc


def _ray_encoding(g: BipartiteGraph, cls: str) -> Encoding:
    hs, vs = g.sorted_h(), g.sorted_v()
    verts = hs + vs
    enc = Encoding(cls, g, {"x": list(verts), "y": list(verts)})
    _order_block(enc, "x")
    _order_block(enc, "y")
    for u in verts:
        enc.dir_vars[u] = enc.new_var()
        if cls == "2DORG":
            enc.clauses.append([enc.dir_vars[u]])
    for h in hs:
        d = enc.dir_vars[h]
        for v in vs:
            u = enc.dir_vars[v]
            ox = enc.before("x", h, v)  # right ray of h reaches v iff x_h < x_v
            oy = enc.before("y", v, h)  # up ray of v reaches h iff y_v < y_h
            if g.has_edge(h, v):
                enc.clauses += [[-d, ox], [d, -ox], [-u, oy], [u, -oy]]
            else:
                for sx in (1, -1):
                    for sy in (1, -1):
                        enc.clauses.append([-sx * d, -sx * ox, -sy * u, -sy * oy])
    return enc


def sat_encode(g: BipartiteGraph, cls: str) -> Encoding:
    cls = normalize_class(cls)
    if is_ray_class(cls):
        return _ray_encoding(g, cls)
    return _segment_encoding(g, cls)


def expected_clause_count(g: BipartiteGraph, cls: str) -> int:
    """Closed form for the clause count of ``sat_encode``."""
    cls = normalize_class(cls)
    nh, nv = len(g.h_vertices), len(g.v_vertices)
    e = len(g.edges)
    non = nh * nv - e
    if is_ray_class(cls):
        t = nh + nv
        count = 2 * 2 * comb(t, 3) + 4 * e + 4 * non
        return count + (t if cls == "2DORG" else 0)
    tx, ty = 2 * nh + nv, 2 * nv + nh
    count = 2 * comb(tx, 3) + 2 * comb(ty, 3) + nh + nv + 4 * e + non
    if cls in ("UGIG", "USEG"):
        count += 2 * comb(nh, 2) + 2 * comb(nv, 2)
    return count


def _axis_order(enc: Encoding, axis: str, truth) -> list:
    tokens = enc.tokens[axis]
    t = len(tokens)
    wins = [0] * t
    for i, j in combinations(range(t), 2):
        if truth(enc.order_vars[(axis, i, j)]):
            wins[j] += 1
        else:
            wins[i] += 1
    order = sorted(range(t), key=lambda i: wins[i])
    if sorted(wins) != list(range(t)):
        raise InconsistentModel(f"order variables on {axis} do not form a total order")
    return [tokens[i] for i in order]


def decode_model(enc: Encoding, model):
    """Certificate (segment classes) or ray layout (ray classes) from a model."""
    true = {lit for lit in model if lit > 0}

    def truth(var):
        return var in true

    lx = _axis_order(enc, "x", truth)
    ly = _axis_order(enc, "y", truth)
    if is_ray_class(enc.cls):
        rx = {u: i for i, u in enumerate(lx)}
        ry = {u: i for i, u in enumerate(ly)}
        rays = {}
        for u in enc.graph.vertices:
            pos = truth(enc.dir_vars[u])
            if u in enc.graph.h_vertices:
                d = "R" if pos else "L"
            else:
                d = "U" if pos else "D"
            rays[u] = OrthoRay(d, rx[u], ry[u])
        return RayRepresentation(rays, enc.graph.h_vertices, enc.graph.v_vertices)
    return Certificate(tuple(lx), tuple(ly))


def unit_side(enc: Encoding, model) -> str | None:
    if not enc.selector:
        return None
    return "horizontal" if enc.selector in set(model) else "vertical"


def _solve_pysat(enc: Encoding, budget, solver_name):
    from pysat.solvers import Solver

    with Solver(name=solver_name, bootstrap_with=enc.clauses) as s:
        timer = None
        if budget is not None:
            timer = threading.Timer(budget, s.interrupt)
            timer.start()
        try:
            status = s.solve_limited(expect_interrupt=True)
        finally:
            if timer is not None:
                timer.cancel()
        if status is None:
            raise BudgetExceeded(f"solver exceeded {budget}s")
        return s.get_model() if status else None


def parse_solver_output(text: str):
    """Model list from a competition-style solver transcript, or None if unsatisfiable."""
    status = None
    lits = []
    for line in text.splitlines():
        parts = line.split()
        if not parts:
            continue
        if parts[0] == "s":
            status = " ".join(parts[1:]).upper()
        elif parts[0] == "v":
            lits += [int(x) for x in parts[1:]]
    if status == "UNSATISFIABLE":
        return None
    if status == "SATISFIABLE":
        return [x for x in lits if x != 0]
    raise InconsistentModel(f"solver printed no verdict (status {status!r})")


def _solve_external(enc: Encoding, budget, command: str):
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "query.cnf")
        with open(path, "w") as fh:
            fh.write(enc.to_dimacs())
        with open(path + ".map", "w") as fh:
            fh.write(enc.varmap_text())
        argv = shlex.split(command) + [path]
        try:
            proc = subprocess.run(argv, capture_output=True, text=True, timeout=budget)
        except subprocess.TimeoutExpired as exc:
            raise BudgetExceeded(f"external solver exceeded {budget}s") from exc
    return parse_solver_output(proc.stdout)


def solve(enc: Encoding, budget=None, solver_cmd=None, solver_name=DEFAULT_SOLVER):
    """Satisfying model as a list of literals, or None when unsatisfiable."""
    if solver_cmd:
        return _solve_external(enc, budget, solver_cmd)
    return _solve_pysat(enc, budget, solver_name)
