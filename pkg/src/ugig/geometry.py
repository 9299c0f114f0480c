"""Exact-rational segment and ray representations."""

from __future__ import annotations

from bisect import bisect_left, insort
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .errors import CollinearOverlap, EmptyRepresentation, GeometryError
from .graph import BipartiteGraph, sort_labels

ONE = Fraction(1)
ZERO = Fraction(0)

HORIZONTAL = "H"
VERTICAL = "V"
RAY_ORIENTATION = {"L": HORIZONTAL, "R": HORIZONTAL, "U": VERTICAL, "D": VERTICAL}


def Q(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to Fraction; floats are refused."""
    if isinstance(value, float):
        raise TypeError("floating-point coordinates are not accepted")
    return Fraction(value)


@dataclass(frozen=True)
class Point:
    x: Fraction
    y: Fraction


@dataclass(frozen=True)
class OrthoSegment:
    orientation: str  # "H" or "V"
    x: Fraction  # anchor: endpoint with the smaller varying coordinate
    y: Fraction
    length: Fraction

    def __post_init__(self):
        if self.orientation not in (HORIZONTAL, VERTICAL):
            raise GeometryError(f"bad orientation {self.orientation!r}")
        object.__setattr__(self, "x", Q(self.x))
        object.__setattr__(self, "y", Q(self.y))
        object.__setattr__(self, "length", Q(self.length))
        if self.length <= 0:
            raise GeometryError("segment length must be positive")

    @classmethod
    def horizontal(cls, x, y, length=1):
        return cls(HORIZONTAL, x, y, length)

    @classmethod
    def vertical(cls, x, y, length=1):
        return cls(VERTICAL, x, y, length)

    @property
    def anchor(self) -> Point:
        return Point(self.x, self.y)

    @property
    def is_unit(self) -> bool:
        return self.length == 1

    @property
    def x0(self):
        return self.x

    @property
    def x1(self):
        return self.x + self.length if self.orientation == HORIZONTAL else self.x

    @property
    def y0(self):
        return self.y

    @property
    def y1(self):
        return self.y + self.length if self.orientation == VERTICAL else self.y

    def translated(self, dx, dy) -> "OrthoSegment":
        return OrthoSegment(self.orientation, self.x + dx, self.y + dy, self.length)

    def scaled(self, factor) -> "OrthoSegment":
        return OrthoSegment(self.orientation, self.x * factor, self.y * factor, self.length * factor)

    def transposed(self) -> "OrthoSegment":
        other = VERTICAL if self.orientation == HORIZONTAL else HORIZONTAL
        return OrthoSegment(other, self.y, self.x, self.length)


@dataclass(frozen=True)
class OrthoRay:
    direction: str  # L, R, U, D
    x: Fraction
    y: Fraction

    def __post_init__(self):
        if self.direction not in RAY_ORIENTATION:
            raise GeometryError(f"bad ray direction {self.direction!r}")
        object.__setattr__(self, "x", Q(self.x))
        object.__setattr__(self, "y", Q(self.y))

    @property
    def orientation(self) -> str:
        return RAY_ORIENTATION[self.direction]

    @property
    def origin(self) -> Point:
        return Point(self.x, self.y)

    def contains(self, px, py) -> bool:
        d = self.direction
        if d == "R":
            return py == self.y and px >= self.x
        if d == "L":
            return py == self.y and px <= self.x
        if d == "U":
            return px == self.x and py >= self.y
        return px == self.x and py <= self.y


@dataclass(frozen=True)
class Box:
    x_min: Fraction
    x_max: Fraction
    y_min: Fraction
    y_max: Fraction

    @property
    def width(self):
        return self.x_max - self.x_min

    @property
    def height(self):
        return self.y_max - self.y_min

    @property
    def semiperimeter(self):
        return self.width + self.height

    def strictly_inside(self, x_lo, y_lo, x_hi, y_hi) -> bool:
        return x_lo < self.x_min and self.x_max < x_hi and y_lo < self.y_min and self.y_max < y_hi


def _partitions(items: Mapping, h, v):
    if h is None or v is None:
        h = frozenset(k for k, s in items.items() if s.orientation == HORIZONTAL)
        v = frozenset(k for k, s in items.items() if s.orientation == VERTICAL)
    h, v = frozenset(h), frozenset(v)
    if h & v:
        raise GeometryError("partitions overlap")
    if h | v != frozenset(items):
        raise GeometryError("partitions do not match the assigned vertices")
    return h, v


@dataclass(frozen=True)
class GridRepresentation:
    """Vertex -> segment map with a declared H/V split.

    Leaving the split as ``None`` derives it from the segment orientations.
    """

    segments: Mapping[str, OrthoSegment]
    h_vertices: frozenset = None
    v_vertices: frozenset = None

    def __post_init__(self):
        h, v = _partitions(self.segments, self.h_vertices, self.v_vertices)
        object.__setattr__(self, "segments", dict(self.segments))
        object.__setattr__(self, "h_vertices", h)
        object.__setattr__(self, "v_vertices", v)

    def __len__(self):
        return len(self.segments)

    def __getitem__(self, label) -> OrthoSegment:
        return self.segments[label]

    def labels(self) -> list[str]:
        return sort_labels(self.segments)

    def map(self, fn) -> "GridRepresentation":
        return GridRepresentation({k: fn(s) for k, s in self.segments.items()}, self.h_vertices, self.v_vertices)

    def translated(self, dx, dy):
        return self.map(lambda s: s.translated(dx, dy))

    def scaled(self, factor):
        return self.map(lambda s: s.scaled(factor))

    def transposed(self) -> "GridRepresentation":
        """Mirror in the diagonal; the H/V roles swap with it."""
        return GridRepresentation(
            {k: s.transposed() for k, s in self.segments.items()}, self.v_vertices, self.h_vertices
        )


@dataclass(frozen=True)
class RayRepresentation:
    rays: Mapping[str, OrthoRay]
    h_vertices: frozenset = None
    v_vertices: frozenset = None

    def __post_init__(self):
        h, v = _partitions(self.rays, self.h_vertices, self.v_vertices)
        object.__setattr__(self, "rays", dict(self.rays))
        object.__setattr__(self, "h_vertices", h)
        object.__setattr__(self, "v_vertices", v)

    def __len__(self):
        return len(self.rays)

    def __getitem__(self, label) -> OrthoRay:
        return self.rays[label]

    def labels(self) -> list[str]:
        return sort_labels(self.rays)

    def direction_classes(self) -> dict:
        """The four classes H_l, H_r, V_u, V_d keyed by direction letter."""
        classes = {d: set() for d in "LRUD"}
        for k, r in self.rays.items():
            classes[r.direction].add(k)
        return {d: frozenset(s) for d, s in classes.items()}


# -- intersections -----------------------------------------------------------


def _overlap(a0, a1, b0, b1) -> bool:
    return a0 <= b1 and b0 <= a1


def intersects(a: OrthoSegment, b: OrthoSegment) -> bool:
    """Closed-segment intersection; raises CollinearOverlap for touching collinear pairs."""
    if a.orientation == b.orientation:
        if a.orientation == HORIZONTAL:
            if a.y == b.y and _overlap(a.x0, a.x1, b.x0, b.x1):
                raise CollinearOverlap(a, b)
        elif a.x == b.x and _overlap(a.y0, a.y1, b.y0, b.y1):
            raise CollinearOverlap(a, b)
        return False
    h, v = (a, b) if a.orientation == HORIZONTAL else (b, a)
    return h.x0 <= v.x <= h.x1 and v.y0 <= h.y <= v.y1


def _collinear_pairs(rep: GridRepresentation):
    """Yield pairs of same-line segments that share a point (sorted sweep per line)."""
    lines = {}
    for k, s in rep.segments.items():
        key = (s.orientation, s.y if s.orientation == HORIZONTAL else s.x)
        lo = s.x0 if s.orientation == HORIZONTAL else s.y0
        hi = s.x1 if s.orientation == HORIZONTAL else s.y1
        lines.setdefault(key, []).append((lo, hi, k))
    for items in lines.values():
        if len(items) < 2:
            continue
        items.sort()
        reach, owner = items[0][1], items[0][2]
        for lo, hi, k in items[1:]:
            if lo <= reach:
                yield owner, k
            if hi > reach:
                reach, owner = hi, k


def _orientation_errors(rep: GridRepresentation):
    for k in rep.h_vertices:
        if rep.segments[k].orientation != HORIZONTAL:
            yield k
    for k in rep.v_vertices:
        if rep.segments[k].orientation != VERTICAL:
            yield k


def intersecting_pairs(rep: GridRepresentation):
    """All (horizontal, vertical) label pairs whose segments meet.

    Left-to-right sweep keeping the active horizontals sorted by height;
    at equal x, insertions come before queries and queries before removals.
    """
    events = []
    for k, s in rep.segments.items():
        if s.orientation == HORIZONTAL:
            events.append((s.x0, 0, k))
            events.append((s.x1, 2, k))
        else:
            events.append((s.x, 1, k))
    events.sort(key=lambda e: (e[0], e[1]))
    active = []  # sorted (y, label)
    out = []
    for _, kind, k in events:
        s = rep.segments[k]
        if kind == 0:
            insort(active, (s.y, k))
        elif kind == 2:
            del active[bisect_left(active, (s.y, k))]
        else:
            lo = bisect_left(active, (s.y0,))
            for y, hk in active[lo:]:
                if y > s.y1:
                    break
                out.append((hk, k))
    return out


def extract_graph(rep: GridRepresentation) -> BipartiteGraph:
    bad = next(iter(sort_labels(_orientation_errors(rep))), None)
    if bad is not None:
        raise GeometryError(f"segment of {bad!r} does not match its declared partition")
    pair = next(_collinear_pairs(rep), None)
    if pair is not None:
        raise CollinearOverlap(*pair)
    return BipartiteGraph(rep.h_vertices, rep.v_vertices, frozenset(intersecting_pairs(rep)))


def extract_graph_bruteforce(rep: GridRepresentation) -> BipartiteGraph:
    """Quadratic pairwise oracle for extract_graph."""
    edges = set()
    labels = list(rep.segments)
    for i, a in enumerate(labels):
        for b in labels[i + 1:]:
            if intersects(rep.segments[a], rep.segments[b]):
                edges.add((a, b) if a in rep.h_vertices else (b, a))
    return BipartiteGraph(rep.h_vertices, rep.v_vertices, frozenset(edges))


def rays_meet(a: OrthoRay, b: OrthoRay) -> bool:
    if a.orientation == b.orientation:
        if a.orientation == HORIZONTAL:
            if a.y != b.y:
                return False
            r, l = (a, b) if a.direction == "R" else (b, a)
            if r.direction == l.direction or l.x >= r.x:
                raise CollinearOverlap(a, b)
            return False
        if a.x != b.x:
            return False
        u, d = (a, b) if a.direction == "U" else (b, a)
        if u.direction == d.direction or d.y >= u.y:
            raise CollinearOverlap(a, b)
        return False
    h, v = (a, b) if a.orientation == HORIZONTAL else (b, a)
    return h.contains(v.x, h.y) and v.contains(v.x, h.y)


def extract_graph_rays(rrep: RayRepresentation) -> BipartiteGraph:
    for k in rrep.h_vertices:
        if rrep.rays[k].orientation != HORIZONTAL:
            raise GeometryError(f"ray of {k!r} does not match its declared partition")
    for k in rrep.v_vertices:
        if rrep.rays[k].orientation != VERTICAL:
            raise GeometryError(f"ray of {k!r} does not match its declared partition")
    labels = sort_labels(rrep.rays)
    edges = set()
    for i, a in enumerate(labels):
        ra = rrep.rays[a]
        for b in labels[i + 1:]:
            if rays_meet(ra, rrep.rays[b]):
                edges.add((a, b) if a in rrep.h_vertices else (b, a))
    return BipartiteGraph(rrep.h_vertices, rrep.v_vertices, frozenset(edges))


def ray_intersection_points(rrep: RayRepresentation):
    pts = []
    for h in rrep.h_vertices:
        rh = rrep.rays[h]
        for v in rrep.v_vertices:
            rv = rrep.rays[v]
            if rh.contains(rv.x, rh.y) and rv.contains(rv.x, rh.y):
                pts.append(Point(rv.x, rh.y))
    return pts


# -- validation --------------------------------------------------------------

CLASSES = ("GIG", "UGIG", "USEG_H", "USEG_V", "ORG_clipped")


@dataclass(frozen=True)
class Violation:
    kind: str  # OrientationMismatch, CollinearContact, NonUnitLength
    vertices: tuple
    detail: str = ""


@dataclass
class Report:
    violations: list = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.valid

    def kinds(self) -> set:
        return {v.kind for v in self.violations}

    def __str__(self):
        if self.valid:
            return "valid"
        return "\n".join(f"{v.kind}: {' '.join(v.vertices)} {v.detail}".rstrip() for v in self.violations)


def validate(rep: GridRepresentation, cls: str = "UGIG") -> Report:
    cls = cls.upper() if cls.upper() != "ORG_CLIPPED" else "ORG_clipped"
    if cls not in CLASSES:
        raise ValueError(f"unknown class {cls!r}")
    report = Report()
    for k in sort_labels(_orientation_errors(rep)):
        report.violations.append(Violation("OrientationMismatch", (k,)))
    for a, b in _collinear_pairs(rep):
        report.violations.append(Violation("CollinearContact", tuple(sort_labels((a, b)))))
    unit_sides = {
        "GIG": (),
        "UGIG": (HORIZONTAL, VERTICAL),
        "ORG_clipped": (HORIZONTAL, VERTICAL),
        "USEG_H": (HORIZONTAL,),
        "USEG_V": (VERTICAL,),
    }[cls]
    for k in rep.labels():
        s = rep.segments[k]
        if s.orientation in unit_sides and s.length != 1:
            report.violations.append(Violation("NonUnitLength", (k,), f"length {s.length}"))
    return report


def bounding_box(rep) -> Box:
    if len(rep) == 0:
        raise EmptyRepresentation("empty representation")
    if isinstance(rep, RayRepresentation):
        xs = [r.x for r in rep.rays.values()]
        ys = [r.y for r in rep.rays.values()]
        return Box(min(xs), max(xs), min(ys), max(ys))
    segs = rep.segments.values()
    return Box(
        min(s.x0 for s in segs), max(s.x1 for s in segs),
        min(s.y0 for s in segs), max(s.y1 for s in segs),
    )


def boundary_size(rep) -> Fraction:
    return bounding_box(rep).semiperimeter
