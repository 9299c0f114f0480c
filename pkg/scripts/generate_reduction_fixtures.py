"""Write the formula/embedding fixtures used by the reduction tests.

networkx is only used here, to get planar rotation systems; the package
itself checks planarity through the Euler count on traced faces.
"""

from itertools import product
from pathlib import Path

import networkx as nx

from ugig.formats import emit_embedding, emit_formula
from ugig.reduction import CnfFormula, RotationSystem, validate_instance

OUT = Path(__file__).resolve().parent.parent / "src" / "ugig" / "data" / "reduction"
SIGNS = [1, -1, 1, 1, -1, -1, 1, -1, 1, -1, -1, 1]


def from_incidence(var_of, clause_of, edges, planar=True):
    """edges: (variable node, clause node) pairs of the incidence graph."""
    g = nx.Graph()
    g.add_edges_from(edges)
    names = {u: f"x{i}" for u, i in var_of.items()} | {u: f"c{j}" for u, j in clause_of.items()}
    if planar:
        ok, emb = nx.check_planarity(g)
        assert ok
        rot = {names[u]: tuple(names[w] for w in emb.neighbors_cw_order(u)) for u in g}
    else:
        rot = {names[u]: tuple(names[w] for w in sorted(g[u], key=str)) for u in g}
    clauses = [[] for _ in clause_of]
    k = 0
    for u in sorted(clause_of, key=clause_of.get):
        for w in sorted(g[u], key=var_of.get):
            clauses[clause_of[u] - 1].append(var_of[w] * SIGNS[k % len(SIGNS)])
            k += 1
    return CnfFormula(len(var_of), clauses), RotationSystem(rot)


def cube():
    verts = ["".join(b) for b in product("01", repeat=3)]
    even = [v for v in verts if v.count("1") % 2 == 0]
    odd = [v for v in verts if v.count("1") % 2 == 1]
    edges = [(a, b) for a in even for b in odd if sum(x != y for x, y in zip(a, b)) == 1]
    return from_incidence({v: i for i, v in enumerate(even, 1)}, {v: j for j, v in enumerate(odd, 1)}, edges)


def rhombic_dodecahedron():
    # cube corners are the variables, face centres the (4-literal) clauses
    corners = ["".join(b) for b in product("01", repeat=3)]
    faces = [(axis, bit) for axis in range(3) for bit in "01"]
    edges = [(c, f) for c in corners for f in faces if c[f[0]] == f[1]]
    return from_incidence({c: i for i, c in enumerate(corners, 1)}, {f: j for j, f in enumerate(faces, 1)}, edges)


def low_occurrence():
    f, r = cube()
    # drop x1 from its first clause: x1 then occurs twice
    j = next(j for j, c in enumerate(f.clauses) if any(abs(l) == 1 for l in c))
    clauses = [list(c) for c in f.clauses]
    clauses[j] = [l for l in clauses[j] if abs(l) != 1]
    rot = {v: tuple(w for w in n if {v, w} != {"x1", f"c{j + 1}"}) for v, n in r.rotation.items()}
    return CnfFormula(f.nvars, clauses), RotationSystem(rot)


def k33():
    edges = [(f"a{i}", f"b{j}") for i in range(1, 4) for j in range(1, 4)]
    return from_incidence({f"a{i}": i for i in range(1, 4)}, {f"b{j}": j for j in range(1, 4)}, edges, planar=False)


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    cases = {
        "cube": (cube(), set()),
        "rhombic_dodecahedron": (rhombic_dodecahedron(), {"ClauseSize"}),
        "low_occurrence": (low_occurrence(), {"OccurrenceCount"}),
        "k33": (k33(), {"NonPlanar"}),
    }
    for name, ((f, r), expect) in cases.items():
        kinds = validate_instance(f, r).kinds()
        assert expect <= kinds and (expect or not kinds), (name, kinds)
        (OUT / f"{name}.cnf").write_text(f"c fixture {name}\n" + emit_formula(f))
        (OUT / f"{name}.emb").write_text(emit_embedding(r))
        print(name, sorted(kinds))


if __name__ == "__main__":
    main()
