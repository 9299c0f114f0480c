"""Explicit layouts: cycles, trees and the shipped fixtures."""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources

from .convert import org_to_eps_square
from .errors import BadParams, NotATree, SquareTooSmall
from .formats import parse_representation
from .geometry import GridRepresentation, OrthoSegment, Q, RayRepresentation
from .graph import BipartiteGraph, label_key, sort_labels

LAYOUTS = ("square", "rectangle")
MAX_SQUARE_HALF = 6


def _check_eps(eps) -> Fraction:
    eps = Q(eps)
    if not 0 < eps < 1:
        raise BadParams(f"epsilon must lie in (0, 1), got {eps}")
    return eps


def _data(name: str) -> str:
    return resources.files("ugig.data").joinpath(name).read_text()


def cycle_rep(length: int, layout: str = "rectangle", eps=Fraction(1, 2)) -> GridRepresentation:
    """Unit layout of the cycle on ``length`` = 2n vertices, labelled as ``graph.cycle``."""
    eps = _check_eps(eps)
    if length < 4 or length % 2:
        raise BadParams("cycle length must be even and at least 4")
    if layout == "square":
        return _cycle_square(length, eps)
    if layout == "rectangle":
        return _cycle_rectangle(length // 2, eps)
    raise BadParams(f"unknown layout {layout!r}")


def square_cycle_rays(length: int) -> RayRepresentation:
    if length // 2 > MAX_SQUARE_HALF:
        raise SquareTooSmall(f"C_{length} has no layout in a (1+eps)-square")
    table = json.loads(_data("cycle_rays.json"))
    return parse_representation(table[str(length)])


def _cycle_square(length: int, eps) -> GridRepresentation:
    rays = square_cycle_rays(length)
    # the shipped ray layouts use the cycle's own labels, so H = even labels
    rays = RayRepresentation(
        rays.rays,
        frozenset(k for k in rays.rays if int(k) % 2 == 0),
        frozenset(k for k in rays.rays if int(k) % 2 == 1),
    )
    return org_to_eps_square(rays, eps)


def _cycle_rectangle(n: int, eps) -> GridRepresentation:
    """Two interleaved combs closed at both ends, inside (2+eps) x (1+eps).

    Verticals 1..n stand at x_i = i*s.  Even ones sit slightly higher and are
    chained by horizontals along the top; odd ones are chained along the
    bottom; two horizontals at mid height close the cycle at the ends.
    """
    s = eps / (4 * n)
    x = {i: i * s for i in range(0, n + 2)}
    half = eps / 2
    b = {}
    for i in range(1, n + 1):
        b[i] = half * i / (n + 2) + (half if i % 2 == 0 else 0)
    verticals = {i: OrthoSegment("V", x[i], b[i], 1) for i in range(1, n + 1)}
    horizontals = {}  # (i, j) -> segment crossing verticals i and j
    odd_top = max(b[i] for i in b if i % 2) + 1
    for i in range(2, n - 1, 2):
        lower = b[i - 2] + 1 if i >= 4 else odd_top
        y = (lower + b[i] + 1) / 2
        horizontals[(i, i + 2)] = OrthoSegment("H", x[i + 2] - 1, y, 1)
    for j in range(1, n - 1, 2):
        upper = b[j + 4] if j + 4 <= n else half
        y = (b[j + 2] + upper) / 2
        horizontals[(j, j + 2)] = OrthoSegment("H", x[j], y, 1)
    r = (x[2] + x[3]) / 2 if n >= 3 else x[2] + s / 2
    horizontals[("left",)] = OrthoSegment("H", r - 1, eps + (1 - eps) / 3, 1)
    l = (x[n - 2] + x[n - 1]) / 2
    horizontals[("right",)] = OrthoSegment("H", l, eps + 2 * (1 - eps) / 3, 1)

    # walk the cycle: 1, 2, 4, ..., top even, top odd, ..., 5, 3
    evens = list(range(2, n + 1, 2))
    odds = list(range(1, n + 1, 2))
    walk = [1] + evens + [o for o in reversed(odds) if o != 1]

    def joining(a, c):
        if {a, c} == {1, 2}:
            return ("left",)
        if {a, c} == {n - 1, n}:
            return ("right",)
        return (min(a, c), max(a, c))

    segs = {}
    # n = 2: both closures join verticals 1 and 2
    closing = ["left", "right"] if n == 2 else None
    for k, w in enumerate(walk):
        segs[str(2 * k + 1)] = verticals[w]
        nxt = walk[(k + 1) % n]
        key = (closing.pop(0),) if closing else joining(w, nxt)
        segs[str((2 * k + 2) % (2 * n))] = horizontals[key]
    rep = GridRepresentation(segs)
    # move into the positive quadrant with a margin
    box_x = min(sg.x0 for sg in segs.values())
    box_y = min(sg.y0 for sg in segs.values())
    return rep.translated(eps / 8 - box_x, eps / 8 - box_y)


# -- trees -----------------------------------------------------------------------


def _far_end(seg: OrthoSegment):
    return (seg.x1, seg.y) if seg.orientation == "H" else (seg.x, seg.y1)


def tree_rep(t: BipartiteGraph) -> GridRepresentation:
    """Unit layout of a tree, built level by level from a vertical root.

    Children of a segment cross it just short of its far end and meet it
    near their own low end.  Far ends of each level run along a line of
    slope -1, and each level works inside half the smallest gap between
    far ends of the level before it.
    """
    if not t.is_tree():
        raise NotATree("input graph is not a tree")
    if not t.v_vertices:
        # a single horizontal vertex
        (h,) = t.h_vertices
        return GridRepresentation({h: OrthoSegment("H", 0, 0, 1)}, t.h_vertices, t.v_vertices)
    root = sort_labels(t.v_vertices)[0]
    segs = {root: OrthoSegment("V", 0, 0, 1)}
    level = [root]
    seen = {root}
    eta = Fraction(1, 8)
    while level:
        nxt = []
        for p in level:
            kids = sorted((c for c in t.neighbors(p) if c not in seen), key=label_key)
            k = len(kids)
            px, py = _far_end(segs[p])
            for m, c in enumerate(kids, start=1):
                along = eta * m / (k + 1)
                across = eta * (k + 1 - m) / (k + 1)
                if segs[p].orientation == "V":
                    segs[c] = OrthoSegment("H", px - along, py - across, 1)
                else:
                    segs[c] = OrthoSegment("V", px - along, py - across, 1)
                seen.add(c)
                nxt.append(c)
        if len(nxt) > 1:
            ends = sorted(_far_end(segs[c]) for c in nxt)
            gap = min(min(b[0] - a[0], a[1] - b[1]) for a, b in zip(ends, ends[1:]))
            eta = min(eta, gap) / 2
        else:
            eta = eta / 2
        level = nxt
    return GridRepresentation(segs, t.h_vertices, t.v_vertices)


# -- shipped fixtures ---------------------------------------------------------------

FIXTURES = ("s_graph_useg", "k33_gig", "s_graph_ugig", "k33_ugig")


def fixture_rep(name: str) -> GridRepresentation:
    table = json.loads(_data("fixtures.json"))
    if name not in table:
        raise BadParams(f"unknown fixture {name!r}; choose from {', '.join(sorted(table))}")
    entry = table[name]
    rep = parse_representation("\n".join(entry["segments"]))
    return GridRepresentation(rep.segments, frozenset(entry["h"]), frozenset(entry["v"]))


def fixture_info(name: str) -> dict:
    return json.loads(_data("fixtures.json"))[name]
