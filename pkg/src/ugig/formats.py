"""Plain-text formats for graphs, representations and certificates."""

from __future__ import annotations

from fractions import Fraction

from .certificate import Certificate
from .errors import FormatError
from .geometry import GridRepresentation, OrthoRay, OrthoSegment, RayRepresentation
from .reduction import CnfFormula, RotationSystem
from .graph import LABEL_RE, BipartiteGraph, build_bipartite, sort_labels


def fmt_q(value) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_q(text: str) -> Fraction:
    """Exact rational from ``p`` or ``p/q``; decimals are refused."""
    if "." in text or "e" in text.lower():
        raise FormatError(f"decimal numbers are not accepted: {text!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad rational {text!r}") from exc


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


def _check_id(label: str, no: int) -> str:
    if not LABEL_RE.match(label):
        raise FormatError(f"line {no}: bad vertex id {label!r}")
    return label


# -- graphs --------------------------------------------------------------------


def emit_graph(g: BipartiteGraph) -> str:
    out = [f"H {h}" for h in g.sorted_h()] + [f"V {v}" for v in g.sorted_v()]
    order = {u: i for i, u in enumerate(sort_labels(g.vertices))}
    out += [f"E {h} {v}" for h, v in sorted(g.edges, key=lambda e: (order[e[0]], order[e[1]]))]
    return "\n".join(out) + "\n"


def parse_graph(text: str) -> BipartiteGraph:
    hs, vs, edges = [], [], []
    for no, parts in _lines(text):
        tag = parts[0]
        if tag in ("H", "V") and len(parts) == 2:
            (hs if tag == "H" else vs).append(_check_id(parts[1], no))
        elif tag == "E" and len(parts) == 3:
            edges.append((_check_id(parts[1], no), _check_id(parts[2], no)))
        else:
            raise FormatError(f"line {no}: expected 'H id', 'V id' or 'E h v'")
    return build_bipartite(hs, vs, edges)


# -- segment and ray representations -------------------------------------------


def emit_representation(rep) -> str:
    rows = []
    if isinstance(rep, RayRepresentation):
        for k in rep.labels():
            r = rep.rays[k]
            rows.append(f"{k} {r.direction} {fmt_q(r.x)} {fmt_q(r.y)}")
    else:
        for k in rep.labels():
            s = rep.segments[k]
            rows.append(f"{k} {s.orientation} {fmt_q(s.x)} {fmt_q(s.y)} {fmt_q(s.length)}")
    return "\n".join(rows) + "\n"


def parse_representation(text: str):
    """Segment or ray representation; the kind is read off the first line."""
    segs, rays = {}, {}
    for no, parts in _lines(text):
        label = _check_id(parts[0], no)
        if label in segs or label in rays:
            raise FormatError(f"line {no}: duplicate id {label!r}")
        if len(parts) == 5 and parts[1] in ("H", "V"):
            x, y, length = (parse_q(p) for p in parts[2:])
            if length <= 0:
                raise FormatError(f"line {no}: length must be positive")
            segs[label] = OrthoSegment(parts[1], x, y, length)
        elif len(parts) == 4 and parts[1] in ("L", "R", "U", "D"):
            rays[label] = OrthoRay(parts[1], parse_q(parts[2]), parse_q(parts[3]))
        else:
            raise FormatError(f"line {no}: expected '<id> H|V x y len' or '<id> L|R|U|D x y'")
    if segs and rays:
        raise FormatError("file mixes segments and rays")
    if rays:
        return RayRepresentation(rays)
    return GridRepresentation(segs)


def is_ray_text(text: str) -> bool:
    for _, parts in _lines(text):
        return len(parts) == 4
    return False


# -- certificates ----------------------------------------------------------------


def emit_certificate(cert: Certificate) -> str:
    return cert.to_text()


def parse_certificate(text: str) -> Certificate:
    try:
        return Certificate.from_text(text)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


# -- formulas, embeddings and role sidecars --------------------------------------


def emit_formula(f: CnfFormula) -> str:
    out = [f"p cnf {f.nvars} {len(f.clauses)}"]
    out += [" ".join(str(l) for l in c) + " 0" for c in f.clauses]
    return "\n".join(out) + "\n"


def parse_formula(text: str) -> CnfFormula:
    header = None
    clauses, current = [], []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.split()[0] in ("c", "%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if header is not None or len(parts) != 4 or parts[1] != "cnf":
                raise FormatError(f"line {no}: bad header {line!r}")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError as exc:
                raise FormatError(f"line {no}: bad header {line!r}") from exc
            continue
        if header is None:
            raise FormatError(f"line {no}: clause before 'p cnf' header")
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError as exc:
                raise FormatError(f"line {no}: bad literal {tok!r}") from exc
            if lit == 0:
                clauses.append(current)
                current = []
            else:
                current.append(lit)
    if header is None:
        raise FormatError("missing 'p cnf' header")
    if current:
        raise FormatError("last clause is not 0-terminated")
    if len(clauses) != header[1]:
        raise FormatError(f"header declares {header[1]} clauses, found {len(clauses)}")
    return CnfFormula(header[0], clauses)


def emit_embedding(r: RotationSystem) -> str:
    return "".join(f"{v}: {' '.join(r.rotation[v])}\n" for v in sort_labels(r.rotation))


def parse_embedding(text: str) -> RotationSystem:
    rot = {}
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, rest = line.partition(":")
        head = head.strip()
        if not sep or not LABEL_RE.match(head):
            raise FormatError(f"line {no}: expected '<vertex>: <cyclic neighbour list>'")
        if head in rot:
            raise FormatError(f"line {no}: vertex {head!r} listed twice")
        rot[head] = tuple(_check_id(t, no) for t in rest.split())
    return RotationSystem(rot)


def emit_roles(roles: dict) -> str:
    return "".join(f"{v} {roles[v]}\n" for v in sort_labels(roles))


def parse_roles(text: str) -> dict:
    out = {}
    for no, parts in _lines(text):
        if len(parts) != 2:
            raise FormatError(f"line {no}: expected '<id> <role>'")
        out[_check_id(parts[0], no)] = parts[1]
    return out


def sniff(text: str) -> str:
    """Guess the format of a file: graph, segments, rays, certificate, formula or embedding."""
    for raw in text.splitlines():
        line = raw.strip()
        if line.startswith("p cnf"):
            return "formula"
        if line and not line.startswith("#") and line.split()[0] != "c":
            if ":" in line and not line.startswith(("X:", "Y:")):
                return "embedding"
            break
    for _, parts in _lines(text):
        if parts[0] in ("X:", "Y:") or parts[0].startswith(("X:", "Y:")):
            return "certificate"
        if parts[0] in ("H", "V", "E") and len(parts) in (2, 3):
            return "graph"
        if len(parts) == 4:
            return "rays"
        return "segments"
    return "graph"
