"""Conversions between ray layouts and unit segment layouts."""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    BadEpsilon,
    BlockedSlide,
    GeometryError,
    NeighborhoodOverlap,
    NotAnEdge,
    NotTwoDirectional,
)
from .geometry import (
    HORIZONTAL,
    GridRepresentation,
    OrthoRay,
    OrthoSegment,
    Q,
    RayRepresentation,
    bounding_box,
    extract_graph_rays,
    ray_intersection_points,
    rays_meet,
)
from .graph import label_key

UNIT_VECTOR = {"R": (1, 0), "L": (-1, 0), "U": (0, 1), "D": (0, -1)}

# tie keys keep every ray-meets-ray relation when equal coordinates are pulled apart
X_TIE = {"R": 0, "U": 1, "D": 1, "L": 2}
Y_TIE = {"U": 0, "L": 1, "R": 1, "D": 2}


def _check_eps(eps) -> Fraction:
    eps = Q(eps)
    if not 0 < eps < 1:
        raise BadEpsilon(f"epsilon must lie in (0, 1), got {eps}")
    return eps


def clip_rays_to_unit(rrep: RayRepresentation) -> GridRepresentation:
    """Cut every ray to length 2s and shrink by 1/(2s).

    s is the side of the smallest square holding all origins and crossings,
    so every crossing survives the cut.  Without crossings s = 1.
    """
    pts = [(r.x, r.y) for r in rrep.rays.values()]
    crossings = ray_intersection_points(rrep)
    if crossings:
        pts += [(p.x, p.y) for p in crossings]
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        s = max(max(xs) - min(xs), max(ys) - min(ys))
    else:
        s = Fraction(0)
    if s == 0:
        s = Fraction(1)
    length = 2 * s
    segs = {}
    for k, r in rrep.rays.items():
        if r.direction == "R":
            seg = OrthoSegment("H", r.x, r.y, length)
        elif r.direction == "L":
            seg = OrthoSegment("H", r.x - length, r.y, length)
        elif r.direction == "U":
            seg = OrthoSegment("V", r.x, r.y, length)
        else:
            seg = OrthoSegment("V", r.x, r.y - length, length)
        segs[k] = seg.scaled(1 / length)
    return GridRepresentation(segs, rrep.h_vertices, rrep.v_vertices)


def separates(rrep: RayRepresentation, edge, p: str, q: str) -> bool:
    """Does the L-curve of the two rays of ``edge`` split p from q?

    The tails between origins and the crossing are slits; only the two
    unbounded arms leaving the crossing cut the plane, into the open quadrant
    between them and its complement.
    """
    u, w = edge
    g = extract_graph_rays(rrep)
    if not g.has_edge(u, w):
        raise NotAnEdge(f"{u}-{w} is not an edge")
    for z in (p, q):
        if z in (u, w) or g.neighbors(z) & {u, w}:
            raise NeighborhoodOverlap(f"{z} touches the edge {u}-{w}")
    ru, rw = rrep.rays[u], rrep.rays[w]
    h, v = (ru, rw) if ru.orientation == HORIZONTAL else (rw, ru)
    cx, cy = v.x, h.y
    (ax, ay), (bx, by) = UNIT_VECTOR[h.direction], UNIT_VECTOR[v.direction]

    def inside(z):
        r = rrep.rays[z]
        dx, dy = r.x - cx, r.y - cy
        # coordinates along the two arms; the arms are axis aligned and orthogonal
        a = dx * ax + dy * ay
        b = dx * bx + dy * by
        return a > 0 and b > 0

    return inside(p) != inside(q)


def separating_edges(rrep: RayRepresentation):
    """All (edge, p, q) triples where the edge separates p from q."""
    g = extract_graph_rays(rrep)
    found = []
    labels = sorted(rrep.rays, key=label_key)
    for h, v in sorted(g.edges, key=lambda e: (label_key(e[0]), label_key(e[1]))):
        free = [z for z in labels if z not in (h, v) and not g.neighbors(z) & {h, v}]
        for i, p in enumerate(free):
            for q in free[i + 1:]:
                if separates(rrep, (h, v), p, q):
                    found.append(((h, v), p, q))
    return found


def _rank_coords(rrep: RayRepresentation, lo, hi):
    """Order-preserving map of origin coordinates into the open interval (lo, hi)."""
    keys_x = sorted(rrep.rays, key=lambda k: (rrep.rays[k].x, X_TIE[rrep.rays[k].direction], label_key(k)))
    keys_y = sorted(rrep.rays, key=lambda k: (rrep.rays[k].y, Y_TIE[rrep.rays[k].direction], label_key(k)))
    m = len(rrep.rays)
    step = (hi - lo) / (m + 1)
    rx = {k: lo + step * (i + 1) for i, k in enumerate(keys_x)}
    ry = {k: lo + step * (i + 1) for i, k in enumerate(keys_y)}
    return rx, ry


def general_position(rrep: RayRepresentation, lo=0, hi=None) -> RayRepresentation:
    """Distinct origin coordinates with the same ray graph (rank normalization)."""
    if hi is None:
        hi = len(rrep.rays) + 1
    rx, ry = _rank_coords(rrep, Q(lo), Q(hi))
    return RayRepresentation(
        {k: OrthoRay(r.direction, rx[k], ry[k]) for k, r in rrep.rays.items()},
        rrep.h_vertices, rrep.v_vertices,
    )


def _frame_segment(direction, x, y) -> OrthoSegment:
    if direction == "R":
        return OrthoSegment("V", x + 1, y, 1)
    if direction == "L":
        return OrthoSegment("V", x, y, 1)
    if direction == "U":
        return OrthoSegment("H", x, y + 1, 1)
    return OrthoSegment("H", x, y, 1)


def org_to_eps_square(rrep: RayRepresentation, eps) -> GridRepresentation:
    """Unit segments inside the open (1+eps)-square with the same graph.

    Origins are first pulled into (delta, eps-delta)^2 with delta = eps/4.
    The map sends horizontal rays to vertical frame segments, so the result
    is mirrored in the diagonal to keep H vertices horizontal.
    """
    eps = _check_eps(eps)
    delta = eps / 4
    rx, ry = _rank_coords(rrep, delta, eps - delta)
    segs = {k: _frame_segment(r.direction, rx[k], ry[k]).transposed() for k, r in rrep.rays.items()}
    return GridRepresentation(segs, rrep.h_vertices, rrep.v_vertices)


def _open_components(lo, hi, forbidden, points):
    """Pieces of (lo, hi) after removing closed intervals and isolated points."""
    pieces = [(lo, hi)] if lo < hi else []
    for a, b in forbidden:
        nxt = []
        for c, d in pieces:
            if b <= c or a >= d:
                nxt.append((c, d))
                continue
            if c < a:
                nxt.append((c, a))
            if b < d:
                nxt.append((b, d))
        pieces = nxt
    for p in points:
        nxt = []
        for c, d in pieces:
            if c < p < d:
                nxt += [(c, p), (p, d)]
            else:
                nxt.append((c, d))
        pieces = nxt
    return pieces


def _slide_frame(segs: dict, eps):
    """Push every segment into a side strip of width eps keeping all contacts.

    Vertical segments move sideways, horizontal ones up or down, each inside
    the common overlap of its neighbors and away from non-neighbors.
    """
    one = Fraction(1)

    def pos(s):
        return s.x if s.orientation == "V" else s.y

    def in_strip(c):
        return 0 < c < eps or 1 < c < 1 + eps

    def strip_distance(c):
        if in_strip(c):
            return Fraction(0)
        return min(abs(c - eps), abs(c - 1))

    def place(k, c):
        s = segs[k]
        if s.orientation == "V":
            return OrthoSegment("V", c, s.y, s.length)
        return OrthoSegment("H", s.x, c, s.length)

    def span(s):
        return (s.y0, s.y1) if s.orientation == "V" else (s.x0, s.x1)

    def cross_span(s):
        return (s.x0, s.x1) if s.orientation == "H" else (s.y0, s.y1)

    def meets(a, b):
        (a0, a1), c = span(a), pos(b)
        (b0, b1), d = span(b), pos(a)
        return a0 <= c <= a1 and b0 <= d <= b1

    todo = [k for k, s in segs.items() if not in_strip(pos(s))]
    while todo:
        todo.sort(key=lambda k: (strip_distance(pos(segs[k])), label_key(k)))
        progressed = False
        last_blocker = None
        for k in list(todo):
            s = segs[k]
            lo, hi = Fraction(0), 1 + eps
            forbidden, points = [], []
            s0, s1 = span(s)
            for j, t in segs.items():
                if j == k:
                    continue
                if t.orientation != s.orientation:
                    t0, t1 = cross_span(t)
                    if meets(s, t):
                        lo, hi = max(lo, t0), min(hi, t1)
                    elif s0 <= pos(t) <= s1:
                        forbidden.append((t0, t1))
                        last_blocker = j
                else:
                    t0, t1 = span(t)
                    if t0 <= s1 and s0 <= t1:
                        points.append(pos(t))
            pieces = []
            for a, b in ((Fraction(0), eps), (one, 1 + eps)):
                pieces += _open_components(max(a, lo), min(b, hi), forbidden, points)
            # the neighbor overlap is closed, so its endpoints are usable too
            if not pieces:
                continue
            c = pos(s)
            best = min(pieces, key=lambda p: (min(abs(c - p[0]), abs(c - p[1])), p[0]))
            segs[k] = place(k, (best[0] + best[1]) / 2)
            todo.remove(k)
            progressed = True
        if not progressed:
            raise BlockedSlide(sorted(todo, key=label_key)[0], last_blocker)
    return segs


def eps_square_to_org(rep: GridRepresentation, eps) -> RayRepresentation:
    """Read a ray layout off a unit representation inside the open (1+eps)-square."""
    eps = _check_eps(eps)
    box = bounding_box(rep)
    if not box.strictly_inside(0, 0, 1 + eps, 1 + eps):
        raise GeometryError("representation is not inside the open (1+eps)-square")
    for k, s in rep.segments.items():
        if s.length != 1:
            raise GeometryError(f"segment {k!r} is not unit")
    # undo the mirror used by org_to_eps_square, then slide into the frame
    segs = {k: s.transposed() for k, s in rep.segments.items()}
    segs = _slide_frame(segs, eps)
    rays = {}
    for k, s in segs.items():
        if s.orientation == "V":
            rays[k] = OrthoRay("L", s.x, s.y) if s.x < eps else OrthoRay("R", s.x - 1, s.y)
        else:
            rays[k] = OrthoRay("D", s.x, s.y) if s.y < eps else OrthoRay("U", s.x, s.y - 1)
    # horizontal rays of H vertices came from vertical segments; directions now match the partition
    raw = RayRepresentation(rays, rep.h_vertices, rep.v_vertices)
    return general_position(raw)


def corner_embed(rrep: RayRepresentation, eps) -> GridRepresentation:
    """Unit segments inside the corner made of two eps-wide strips (right/up rays only)."""
    eps = _check_eps(eps)
    bad = [k for k, r in rrep.rays.items() if r.direction not in ("R", "U")]
    if bad:
        raise NotTwoDirectional(f"rays {sorted(bad, key=label_key)} point left or down")
    rx, ry = _rank_coords(rrep, Fraction(0), eps)
    segs = {}
    for k, r in rrep.rays.items():
        orient = "H" if r.direction == "R" else "V"
        segs[k] = OrthoSegment(orient, rx[k], ry[k], 1)
    return GridRepresentation(segs, rrep.h_vertices, rrep.v_vertices)


def ray_meets_table(rrep: RayRepresentation):
    """Pairwise meet relation, a brute-force oracle for tests."""
    out = {}
    for h in rrep.h_vertices:
        for v in rrep.v_vertices:
            out[(h, v)] = rays_meet(rrep.rays[h], rrep.rays[v])
    return out
