"""Snap unit representations onto the 1/n grid inside an (n+1)-box."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InconsistentEvents, NotUGIG
from .geometry import HORIZONTAL, GridRepresentation, OrthoSegment, Q, validate
from .graph import label_key

SEG_LOW, SEG_HIGH, POINT = "segLow", "segHigh", "point"


@dataclass(frozen=True)
class AxisEvent:
    owner: str
    kind: str  # segLow, segHigh or point
    coord: Fraction


def _intervals(events):
    lows, highs, points = {}, {}, {}
    for e in events:
        c = Q(e.coord)
        if e.kind == SEG_LOW:
            lows[e.owner] = c
        elif e.kind == SEG_HIGH:
            if e.owner not in lows:
                raise InconsistentEvents(f"high end of {e.owner!r} comes before its low end")
            highs[e.owner] = c
        elif e.kind == POINT:
            points[e.owner] = c
        else:
            raise InconsistentEvents(f"unknown event kind {e.kind!r}")
    if set(lows) != set(highs):
        raise InconsistentEvents("interval without a high end")
    for k in lows:
        if highs[k] - lows[k] != 1:
            raise NotUGIG(f"interval of {k!r} is not unit")
    # (left, tie, owner); points become [p-1, p], sorting before real intervals on ties
    items = [(lo, 0, k) for k, lo in lows.items()] + [(p - 1, -1, k) for k, p in points.items()]
    return items


def axis_sweep(events, n: int) -> dict:
    """New left end of every owner's unit interval, as multiples of 1/n.

    All left and right events keep their relative order, so the
    sub-order of the original events is unchanged.  A point owner's value
    is the left end of the unit interval ending at the point.
    """
    items = _intervals(events)
    if not items:
        return {}
    n = max(n, len(items))
    lefts = sorted(items, key=lambda it: (it[0], it[1], label_key(it[2])))
    rights = [(lo + 1, t + 2, k) for lo, t, k in lefts]
    # k_i = number of intervals already closed when interval i opens
    closed_before = []
    j = 0
    for lo, t, k in lefts:
        key = (lo, t, label_key(k))
        while j < len(rights) and (rights[j][0], rights[j][1], label_key(rights[j][2])) < key:
            j += 1
        closed_before.append(j)

    eta = Fraction(1, 4 * n * n)
    ell = []
    for i, kc in enumerate(closed_before):
        if i == 0:
            ell.append(Fraction(-1))
            continue
        lower = ell[i - 1]
        if kc > 0:
            lower = max(lower, ell[kc - 1] + 1)
        if kc < i:
            upper = ell[kc] + 1
            ell.append(min(lower + eta, (lower + upper) / 2))
        else:
            ell.append(lower + eta)

    # discretize: keep integer parts, replace fractional parts by their rank
    order = sorted(range(len(ell)), key=lambda i: (ell[i] - math.floor(ell[i]), i))
    rank = {i: r for r, i in enumerate(order)}
    return {lefts[i][2]: math.floor(ell[i]) + Fraction(rank[i], n) for i in range(len(ell))}


def axis_events(rep: GridRepresentation, axis: str):
    out = []
    for k, s in rep.segments.items():
        along = (s.orientation == HORIZONTAL) == (axis == "x")
        if along:
            lo, hi = (s.x0, s.x1) if axis == "x" else (s.y0, s.y1)
            out += [AxisEvent(k, SEG_LOW, lo), AxisEvent(k, SEG_HIGH, hi)]
        else:
            out.append(AxisEvent(k, POINT, s.x if axis == "x" else s.y))
    return out


def canonicalize(rep: GridRepresentation) -> GridRepresentation:
    report = validate(rep, "UGIG")
    if not report.valid:
        raise NotUGIG(str(report))
    n = len(rep)
    xs = axis_sweep(axis_events(rep, "x"), n)
    ys = axis_sweep(axis_events(rep, "y"), n)
    segs = {}
    for k, s in rep.segments.items():
        if s.orientation == HORIZONTAL:
            segs[k] = OrthoSegment("H", xs[k], ys[k] + 1, 1)
        else:
            segs[k] = OrthoSegment("V", xs[k] + 1, ys[k], 1)
    return GridRepresentation(segs, rep.h_vertices, rep.v_vertices)
