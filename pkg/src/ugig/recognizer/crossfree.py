"""Row/column permutation search for cross-free adjacency matrices."""

from __future__ import annotations

from ..errors import CapExceeded
from ..graph import BipartiteGraph
from ..kernels import cross_free_search as _kernel

DEFAULT_CAP = 8


def adjacency_matrix(g: BipartiteGraph, rows=None, cols=None):
    rows = g.sorted_h() if rows is None else rows
    cols = g.sorted_v() if cols is None else cols
    return [[1 if g.has_edge(h, v) else 0 for v in cols] for h in rows]


def has_cross(matrix) -> bool:
    """A 0 with a 1 somewhere left, right, above and below it."""
    nr = len(matrix)
    nc = len(matrix[0]) if nr else 0
    for i in range(nr):
        for j in range(nc):
            if matrix[i][j]:
                continue
            if (any(matrix[i][:j]) and any(matrix[i][j + 1:])
                    and any(matrix[k][j] for k in range(i)) and any(matrix[k][j] for k in range(i + 1, nr))):
                return True
    return False


def cross_free_search(g: BipartiteGraph, cap: int = DEFAULT_CAP):
    """(row order, column order) of a cross-free adjacency matrix, or None."""
    hs, vs = g.sorted_h(), g.sorted_v()
    if len(hs) > cap or len(vs) > cap:
        raise CapExceeded(f"partitions of size {len(hs)}/{len(vs)} exceed the cap {cap}")
    col = {v: j for j, v in enumerate(vs)}
    masks = [sum(1 << col[v] for v in g.neighbors(h)) for h in hs]
    found = _kernel(masks, len(vs))
    if found is None:
        return None
    rows, cols = found
    return [hs[i] for i in rows], [vs[j] for j in cols]
