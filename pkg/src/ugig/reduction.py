"""Compile small planar 3-SAT(4) instances into gadget graphs of prescribed girth.

The clause gadget is a fixed template of our own: the paper only draws it.
A surrounding cycle carries three port pairs (L, T, R); each pair is one
edge, and consecutive pairs are joined by two-part arcs.  Inside sit two
straight cores X1, X2 and three literal cores c_L, c_T, c_R, all linked
by long paths.  Every edge that is not a port edge lies on a long path,
and port edges form a matching, so each cycle uses at least two long paths.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from itertools import combinations

from .errors import AlreadyFourOccurrences, BadGirth, InvalidInstance
from .geometry import Report, Violation
from .graph import BipartiteGraph, girth

ROLES = ("clause_core", "clause_cycle", "variable_a", "variable_b", "occurrence_path", "dummy_path")


def _template() -> dict:
    return json.loads(resources.files("ugig.data").joinpath("clause_template.json").read_text())


_T = _template()
PORT_PAIRS = tuple(_T["port_pairs"])
_CYCLE_NODES = [tuple(x) for x in _T["cycle_nodes"]]
_ARCS = [tuple(x) for x in _T["arcs"]]
_CORES = [tuple(x) for x in _T["cores"]]
_CORE_PATHS = [tuple(x) for x in _T["core_paths"]]
_COLOUR = dict(_CYCLE_NODES + _CORES)


def path_length(base: int, parity: int) -> int:
    """Smallest length >= base with the given parity."""
    return base if base % 2 == parity else base + 1


def jigsaw_length(k: int) -> int:
    return k // 2 + k % 2 + 1


@dataclass(frozen=True)
class CnfFormula:
    nvars: int
    clauses: tuple

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))

    def occurrences(self) -> dict:
        occ = {i: [] for i in range(1, self.nvars + 1)}
        for j, c in enumerate(self.clauses, start=1):
            for lit in c:
                occ.setdefault(abs(lit), []).append(j)
        return occ


@dataclass(frozen=True)
class RotationSystem:
    """Cyclic neighbour order at every vertex of the incidence graph (x<i> / c<j>)."""

    rotation: dict

    def darts(self):
        return [(u, w) for u, nbrs in self.rotation.items() for w in nbrs]

    def next_dart(self, dart):
        u, w = dart
        around = self.rotation[w]
        return w, around[(around.index(u) + 1) % len(around)]

    def faces(self) -> list:
        seen = set()
        faces = []
        for d in sorted(self.darts()):
            if d in seen:
                continue
            face = []
            while d not in seen:
                seen.add(d)
                face.append(d)
                d = self.next_dart(d)
            faces.append(tuple(face))
        return faces

    def face_of(self, dart) -> int:
        for i, f in enumerate(self.faces()):
            if dart in f:
                return i
        raise KeyError(dart)


def incidence_edges(f: CnfFormula) -> set:
    return {frozenset((f"x{abs(l)}", f"c{j}")) for j, c in enumerate(f.clauses, start=1) for l in c}


def _connected(vertices, adj, removed=frozenset()) -> bool:
    left = [v for v in vertices if v not in removed]
    if not left:
        return True
    seen = {left[0]}
    stack = [left[0]]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in removed and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(left)


def validate_instance(f: CnfFormula, r: RotationSystem) -> Report:
    rep = Report()
    for j, c in enumerate(f.clauses, start=1):
        if not 1 <= len(c) <= 3:
            rep.violations.append(Violation("ClauseSize", (f"c{j}",), f"{len(c)} literals"))
        if len({abs(l) for l in c}) != len(c):
            rep.violations.append(Violation("RepeatedVariable", (f"c{j}",)))
        if any(l == 0 or abs(l) > f.nvars for l in c):
            rep.violations.append(Violation("BadLiteral", (f"c{j}",)))
    for var, where in f.occurrences().items():
        if not 3 <= len(where) <= 4:
            rep.violations.append(Violation("OccurrenceCount", (f"x{var}",), f"{len(where)} occurrences"))
    edges = incidence_edges(f)
    vertices = sorted({v for e in edges for v in e})
    darts = set(r.darts())
    given = {frozenset(d) for d in darts}
    symmetric = all((w, u) in darts for u, w in darts)
    if given != edges or not symmetric or any(len(set(n)) != len(n) for n in r.rotation.values()):
        rep.violations.append(Violation("RotationMismatch", (), "rotation system does not list the incidence edges"))
        return rep
    adj = {v: set(r.rotation.get(v, ())) for v in vertices}
    if not _connected(vertices, adj):
        rep.violations.append(Violation("NotConnected", ()))
        return rep
    nf = len(r.faces())
    if len(vertices) - len(edges) + nf != 2:
        rep.violations.append(Violation("NonPlanar", (), f"V - E + F = {len(vertices) - len(edges) + nf}"))
    if len(vertices) < 4:
        rep.violations.append(Violation("NotThreeConnected", (), "fewer than four vertices"))
    else:
        for a, b in combinations(vertices, 2):
            if not _connected(vertices, adj, frozenset((a, b))):
                rep.violations.append(Violation("NotThreeConnected", (a, b), "separating pair"))
                break
    return rep


@dataclass
class GadgetGraph:
    graph: BipartiteGraph
    roles: dict
    ports: dict = field(default_factory=dict)  # name -> vertex, still open
    used_ports: dict = field(default_factory=dict)
    capped_ports: dict = field(default_factory=dict)
    meta: dict = field(default_factory=dict)

    def role_counts(self) -> dict:
        out = {r: 0 for r in ROLES}
        for r in self.roles.values():
            out[r] += 1
        return out


class _Builder:
    def __init__(self):
        self.colour = {}
        self.roles = {}
        self.edges = set()
        self.counter = 0

    def vertex(self, label, colour, role):
        if label in self.colour:
            raise ValueError(f"duplicate vertex {label}")
        self.colour[label] = colour
        self.roles[label] = role
        return label

    def edge(self, u, w):
        if self.colour[u] == self.colour[w]:
            raise ValueError(f"edge {u}-{w} joins equal colours")
        self.edges.add((u, w) if self.colour[u] == 0 else (w, u))

    def path(self, u, w, base, role, prefix):
        """Join u and w by a new path of length >= base matching their colours; returns its vertices."""
        length = path_length(base, (self.colour[u] + self.colour[w]) % 2)
        chain = [u]
        for i in range(1, length):
            chain.append(self.vertex(f"{prefix}.{i}", (self.colour[u] + i) % 2, role))
        chain.append(w)
        for a, b in zip(chain, chain[1:]):
            self.edge(a, b)
        return chain

    def free_path(self, u, length, role, prefix):
        chain = [u]
        for i in range(1, length + 1):
            chain.append(self.vertex(f"{prefix}.{i}", (self.colour[u] + i) % 2, role))
        for a, b in zip(chain, chain[1:]):
            self.edge(a, b)
        return chain

    def gadget(self, **kw) -> GadgetGraph:
        h = [v for v, c in self.colour.items() if c == 0]
        v = [v for v, c in self.colour.items() if c == 1]
        return GadgetGraph(BipartiteGraph(frozenset(h), frozenset(v), frozenset(self.edges)), dict(self.roles), **kw)


def _clause_into(b: _Builder, name: str, jig: int) -> dict:
    nodes = {}
    for node, col in _CYCLE_NODES:
        nodes[node] = b.vertex(f"{name}.{node}", col, "clause_cycle")
    for node, col in _CORES:
        nodes[node] = b.vertex(f"{name}.{node}", col, "clause_core")
    for p in PORT_PAIRS:
        b.edge(nodes[p + "1"], nodes[p + "2"])
    for start, mid, end in _ARCS:
        b.path(nodes[start], nodes[mid], jig, "clause_cycle", f"{name}.{start}{mid}")
        b.path(nodes[mid], nodes[end], jig, "clause_cycle", f"{name}.{mid}{end}")
    for u, w in _CORE_PATHS:
        b.path(nodes[u], nodes[w], jig, "clause_core", f"{name}.{u}{w}")
    return {p + s: nodes[p + s] for p in PORT_PAIRS for s in "12"}


def clause_template_size(jig: int) -> int:
    size = len(_CYCLE_NODES) + len(_CORES)
    for start, mid, end in _ARCS:
        size += path_length(jig, (_COLOUR[start] + _COLOUR[mid]) % 2) - 1
        size += path_length(jig, (_COLOUR[mid] + _COLOUR[end]) % 2) - 1
    for u, w in _CORE_PATHS:
        size += path_length(jig, (_COLOUR[u] + _COLOUR[w]) % 2) - 1
    return size


def build_clause_gadget(k: int) -> GadgetGraph:
    if k < 4:
        raise BadGirth("girth parameter must be at least 4")
    b = _Builder()
    ports = _clause_into(b, "C", jigsaw_length(k))
    return b.gadget(ports=ports, meta={"k": k, "jigsaw": jigsaw_length(k)})


def build_variable_gadget(name: str = "x") -> GadgetGraph:
    b = _Builder()
    a = b.vertex(f"{name}.a", 0, "variable_a")
    bb = b.vertex(f"{name}.b", 1, "variable_b")
    b.edge(a, bb)
    return b.gadget()


def build_occurrence(k: int, name: str = "o") -> GadgetGraph:
    """Two vertex-disjoint paths of k edges each (ends are left open)."""
    if k < 4:
        raise BadGirth("girth parameter must be at least 4")
    b = _Builder()
    for p in ("P1", "P2"):
        start = b.vertex(f"{name}.{p}.0", 0, "occurrence_path")
        b.free_path(start, k, "occurrence_path", f"{name}.{p}")
    return b.gadget(meta={"k": k})


def variable_order(f: CnfFormula, r: RotationSystem, var: int) -> list:
    """Clauses containing ``var`` in the cyclic order of the embedding."""
    return [int(c[1:]) for c in r.rotation[f"x{var}"]]


def _literal_slots(f: CnfFormula, r: RotationSystem, j: int) -> dict:
    """Port pair used by each variable of clause j, following the rotation at c_j."""
    return {int(x[1:]): PORT_PAIRS[i] for i, x in enumerate(r.rotation[f"c{j}"])}


def _compile_once(f: CnfFormula, r: RotationSystem, k: int, jig: int, occ_len: int) -> GadgetGraph:
    b = _Builder()
    ports = {}
    for j in range(1, len(f.clauses) + 1):
        for name, vtx in _clause_into(b, f"c{j}", jig).items():
            ports[(j, name)] = vtx
    ends = {}
    for var in range(1, f.nvars + 1):
        a = b.vertex(f"x{var}.a", 0, "variable_a")
        bb = b.vertex(f"x{var}.b", 1, "variable_b")
        b.edge(a, bb)
        ends[var] = (a, bb)
    used = {}
    occ_paths = {}  # (var, position) -> (P1 chain, P2 chain), chains start at the variable
    for var in range(1, f.nvars + 1):
        a, bb = ends[var]
        for pos, j in enumerate(variable_order(f, r, var), start=1):
            lit = next(l for l in f.clauses[j - 1] if abs(l) == var)
            pair = _literal_slots(f, r, j)[var]
            p1_var, p2_var = (a, bb) if pos % 2 else (bb, a)
            p1_port, p2_port = (pair + "1", pair + "2") if lit > 0 else (pair + "2", pair + "1")
            c1 = b.path(p1_var, ports[(j, p1_port)], occ_len, "occurrence_path", f"x{var}.o{pos}.P1")
            c2 = b.path(p2_var, ports[(j, p2_port)], occ_len, "occurrence_path", f"x{var}.o{pos}.P2")
            occ_paths[(var, pos)] = (c1, c2)
            used[(j, p1_port)] = used[(j, p2_port)] = (var, pos)
    gg = b.gadget()
    gg.ports = {}
    gg.used_ports = {f"c{j}.{name}": v for (j, name), v in ports.items() if (j, name) in used}
    gg.capped_ports = {f"c{j}.{name}": v for (j, name), v in ports.items() if (j, name) not in used}
    gg.meta = {"k": k, "jigsaw": jig, "occurrence_length": occ_len, "occurrences": {}, "dummies": []}
    for var in range(1, f.nvars + 1):
        gg.meta["occurrences"][var] = len(variable_order(f, r, var))
    gg._builder = b
    gg._occ_paths = occ_paths
    gg._ends = ends
    return gg


def add_dummy_occurrence(gg: GadgetGraph, variable: int, face, k: int) -> GadgetGraph:
    """Fourth, free-ended occurrence of ``variable`` tied to its two neighbouring occurrences."""
    count = gg.meta["occurrences"][variable]
    if count >= 4:
        raise AlreadyFourOccurrences(f"x{variable} already has four occurrences")
    if count != 3:
        raise InvalidInstance(f"x{variable} has {count} occurrences")
    b = gg._builder
    a, bb = gg._ends[variable]
    length = gg.meta["occurrence_length"]
    depth = k // 2 + k % 2
    # fourth position is even: P1 leaves b, P2 leaves a
    d1 = b.free_path(bb, length, "dummy_path", f"x{variable}.o4.P1")
    d2 = b.free_path(a, length, "dummy_path", f"x{variable}.o4.P2")
    prev_p2 = gg._occ_paths[(variable, 3)][1]  # third occurrence is odd, so its P2 leaves b
    next_p1 = gg._occ_paths[(variable, 1)][0]  # first occurrence P1 leaves a
    b.edge(d1[depth], prev_p2[depth + 1])
    b.edge(d2[depth], next_p1[depth + 1])
    gg._occ_paths[(variable, 4)] = (d1, d2)
    new = b.gadget()
    gg.graph, gg.roles = new.graph, new.roles
    gg.meta["occurrences"][variable] = 4
    gg.meta["dummies"].append({"variable": variable, "face": face})
    return gg


def predicted_vertex_count(f: CnfFormula, r: RotationSystem, jig: int, occ_len: int) -> int:
    """Closed-form size of the compiled graph for the given path lengths."""
    total = len(f.clauses) * clause_template_size(jig) + 2 * f.nvars
    for var in range(1, f.nvars + 1):
        order = variable_order(f, r, var)
        for pos, j in enumerate(order, start=1):
            lit = next(l for l in f.clauses[j - 1] if abs(l) == var)
            # every port pair is coloured (0, 1), so only the orientation matters
            var_cols = (0, 1) if pos % 2 else (1, 0)
            port_cols = (0, 1) if lit > 0 else (1, 0)
            for vc, pc in zip(var_cols, port_cols):
                total += path_length(occ_len, (vc + pc) % 2) - 1
        if len(order) == 3:
            total += 2 * occ_len
    return total


def compile_instance(f: CnfFormula, r: RotationSystem, k: int) -> GadgetGraph:
    if k < 4:
        raise BadGirth("girth parameter must be at least 4")
    report = validate_instance(f, r)
    if not report.valid:
        raise InvalidInstance(str(report))
    jig, occ_len = jigsaw_length(k), k
    while True:
        gg = _compile_once(f, r, k, jig, occ_len)
        for var in range(1, f.nvars + 1):
            if gg.meta["occurrences"][var] == 3:
                order = variable_order(f, r, var)
                face = r.face_of((f"x{var}", f"c{order[0]}"))
                add_dummy_occurrence(gg, var, face, k)
        if girth(gg.graph) >= k:
            break
        # check-and-inflate: lengthen every long path and rebuild
        jig += 2
        occ_len += 2
    gg.meta["predicted_vertices"] = predicted_vertex_count(f, r, jig, occ_len)
    gg.meta["girth"] = girth(gg.graph)
    del gg._builder, gg._occ_paths, gg._ends
    return gg


# keep the spec-facing name available
compile = compile_instance

