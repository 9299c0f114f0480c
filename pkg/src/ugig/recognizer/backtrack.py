"""Exhaustive search over endpoint orders, for small instances."""

from __future__ import annotations

import time
from functools import lru_cache

from ..certificate import Certificate, Token
from ..errors import BudgetExceeded
from ..geometry import OrthoRay, RayRepresentation
from ..graph import BipartiteGraph

DEFAULT_CAP = 8


class _Clock:
    def __init__(self, budget):
        self.deadline = None if budget is None else time.monotonic() + budget
        self.ticks = 0

    def check(self):
        self.ticks += 1
        if self.deadline is not None and self.ticks % 256 == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded("backtracking budget exhausted")


def _add_minimal(front: dict, frag: frozenset, seq) -> None:
    for other in list(front):
        if other <= frag:
            return
    for other in [o for o in front if frag < o]:
        del front[other]
    front[frag] = seq


def _x_fronts(g: BipartiteGraph, fifo: bool, clock: _Clock):
    """Minimal sets of point-inside-interval pairs reachable by some x order.

    Returns a map from each minimal set to one token sequence producing it.
    """
    hs, vs = g.sorted_h(), g.sorted_v()
    nbr = {u: g.neighbors(u) for u in g.vertices}

    @lru_cache(maxsize=None)
    def solve(opened, closed, placed):
        clock.check()
        front = {}
        if len(closed) == len(hs) and len(placed) == len(vs):
            return {frozenset(): ()}
        open_set = set(opened) - set(closed)
        open_seq = [h for h in opened if h not in closed]
        for h in hs:
            if h not in opened and not (nbr[h] & placed):
                for frag, seq in solve(opened + (h,), closed, placed).items():
                    _add_minimal(front, frag, (Token(h, "L"),) + seq)
        candidates = open_seq[:1] if fifo else open_seq
        for h in candidates:
            if nbr[h] <= placed:
                for frag, seq in solve(opened, closed | {h}, placed).items():
                    _add_minimal(front, frag, (Token(h, "R"),) + seq)
        for v in vs:
            if v not in placed and nbr[v] <= open_set:
                here = frozenset((h, v) for h in open_set)
                for frag, seq in solve(opened, closed, placed | {v}).items():
                    _add_minimal(front, frag | here, (Token(v, "P"),) + seq)
        return front

    try:
        return solve((), frozenset(), frozenset())
    finally:
        solve.cache_clear()


def _y_order(g: BipartiteGraph, inside_x: frozenset, fifo: bool, clock: _Clock):
    """A y order matching the graph given the x relation, or None."""
    hs, vs = g.sorted_h(), g.sorted_v()
    nbr = {u: g.neighbors(u) for u in g.vertices}
    forbid = {h: frozenset(v for v in vs if (h, v) in inside_x and not g.has_edge(h, v)) for h in hs}
    failed = set()

    def dfs(opened, closed, placed):
        clock.check()
        key = (opened if fifo else frozenset(opened), closed, placed)
        if key in failed:
            return None
        if len(closed) == len(vs) and len(placed) == len(hs):
            return ()
        open_set = set(opened) - set(closed)
        open_seq = [v for v in opened if v not in closed]
        for h in hs:
            if h not in placed and nbr[h] <= open_set and not (forbid[h] & open_set):
                rest = dfs(opened, closed, placed | {h})
                if rest is not None:
                    return (Token(h, "P"),) + rest
        for v in (open_seq[:1] if fifo else open_seq):
            if nbr[v] <= placed:
                rest = dfs(opened, closed | {v}, placed)
                if rest is not None:
                    return (Token(v, "R"),) + rest
        for v in vs:
            if v not in opened and not (nbr[v] & placed):
                rest = dfs(opened + (v,), closed, placed)
                if rest is not None:
                    return (Token(v, "L"),) + rest
        failed.add(key)
        return None

    return dfs((), frozenset(), frozenset())


def search_segments(g: BipartiteGraph, fifo_x: bool, fifo_y: bool, budget=None):
    """Certificate for g with FIFO (unit) constraints on the chosen axes, or None."""
    clock = _Clock(budget)
    fronts = _x_fronts(g, fifo_x, clock)
    for frag in sorted(fronts, key=len):
        ly = _y_order(g, frag, fifo_y, clock)
        if ly is not None:
            return Certificate(fronts[frag], ly)
    return None


def _reaches(adj, src, dst) -> bool:
    stack, seen = [src], {src}
    while stack:
        u = stack.pop()
        if u == dst:
            return True
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return False


def _topo(adj, verts):
    indeg = {u: 0 for u in verts}
    for u in verts:
        for w in adj[u]:
            indeg[w] += 1
    ready = sorted((u for u in verts if indeg[u] == 0), reverse=True)
    out = []
    while ready:
        u = ready.pop()
        out.append(u)
        for w in sorted(adj[u]):
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    return out


def search_rays(g: BipartiteGraph, two_directional: bool, budget=None):
    """Ray layout for g, or None.

    For fixed directions every edge fixes one x arc and one y arc between
    origins; every non-edge needs the reverse arc on at least one axis.
    A layout exists iff some choice keeps both arc sets acyclic.
    """
    clock = _Clock(budget)
    hs, vs = g.sorted_h(), g.sorted_v()
    verts = hs + vs
    non_edges = [(h, v) for h in hs for v in vs if not g.has_edge(h, v)]

    if two_directional:
        assignments = [(tuple([True] * len(hs)), tuple([True] * len(vs)))]
    else:
        # mirroring an axis flips all directions on it, so fix the first of each side
        def combos(k):
            if k == 0:
                return [()]
            out = []
            for mask in range(1 << (k - 1)):
                out.append((True,) + tuple(bool(mask >> i & 1) for i in range(k - 1)))
            return out
        assignments = [(a, b) for a in combos(len(hs)) for b in combos(len(vs))]

    for dh_t, dv_t in assignments:
        dh = dict(zip(hs, dh_t))
        dv = dict(zip(vs, dv_t))
        ax = {u: set() for u in verts}
        ay = {u: set() for u in verts}

        def x_arc(h, v, meet):
            # meet on x iff (h points right) == (x_h < x_v)
            return (h, v) if dh[h] == meet else (v, h)

        def y_arc(h, v, meet):
            return (v, h) if dv[v] == meet else (h, v)

        ok = True
        for h in hs:
            for v in vs:
                if g.has_edge(h, v):
                    for adj, (a, b) in ((ax, x_arc(h, v, True)), (ay, y_arc(h, v, True))):
                        if _reaches(adj, b, a):
                            ok = False
                        adj[a].add(b)
        if not ok:
            continue

        def dfs(i):
            clock.check()
            if i == len(non_edges):
                return True
            h, v = non_edges[i]
            for adj, (a, b) in ((ax, x_arc(h, v, False)), (ay, y_arc(h, v, False))):
                if b in adj[a]:
                    if dfs(i + 1):
                        return True
                    continue
                if _reaches(adj, b, a):
                    continue
                adj[a].add(b)
                if dfs(i + 1):
                    return True
                adj[a].discard(b)
            return False

        if dfs(0):
            rx = {u: i for i, u in enumerate(_topo(ax, verts))}
            ry = {u: i for i, u in enumerate(_topo(ay, verts))}
            rays = {}
            for h in hs:
                rays[h] = OrthoRay("R" if dh[h] else "L", rx[h], ry[h])
            for v in vs:
                rays[v] = OrthoRay("U" if dv[v] else "D", rx[v], ry[v])
            return RayRepresentation(rays, g.h_vertices, g.v_vertices)
    return None
