"""Abstract bipartite graphs, structural measures and named instances."""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable

from .errors import (
    BadParams,
    DuplicateLabel,
    EdgeWithinPartition,
    NotATree,
    OddCycle,
    UnknownEndpoint,
)
from . import kernels

LABEL_RE = re.compile(r"^[A-Za-z0-9_.-]+$")

INFINITY = math.inf


def label_key(label: str):
    """Sort key ordering numeric labels numerically and the rest lexically."""
    parts = re.split(r"(\d+)", label)
    return tuple((0, int(p)) if p.isdigit() else (1, p) for p in parts if p != "")


def sort_labels(labels: Iterable[str]) -> list[str]:
    return sorted(labels, key=label_key)


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph with a declared split into horizontal and vertical vertices.

    ``edges`` holds ``(h, v)`` pairs with ``h`` in ``h_vertices``.
    """

    h_vertices: frozenset
    v_vertices: frozenset
    edges: frozenset
    _adj: dict = field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        adj = {u: set() for u in self.h_vertices | self.v_vertices}
        for h, v in self.edges:
            adj[h].add(v)
            adj[v].add(h)
        object.__setattr__(self, "_adj", {u: frozenset(n) for u, n in adj.items()})

    @property
    def vertices(self) -> frozenset:
        return self.h_vertices | self.v_vertices

    def __len__(self) -> int:
        return len(self.h_vertices) + len(self.v_vertices)

    def neighbors(self, u: str) -> frozenset:
        return self._adj[u]

    def degree(self, u: str) -> int:
        return len(self._adj[u])

    def has_edge(self, a: str, b: str) -> bool:
        return b in self._adj.get(a, ())

    def side(self, u: str) -> str:
        if u in self.h_vertices:
            return "H"
        if u in self.v_vertices:
            return "V"
        raise UnknownEndpoint(u)

    def sorted_h(self) -> list[str]:
        return sort_labels(self.h_vertices)

    def sorted_v(self) -> list[str]:
        return sort_labels(self.v_vertices)

    def undirected_edges(self) -> frozenset:
        return frozenset(frozenset(e) for e in self.edges)

    def same_graph(self, other: "BipartiteGraph") -> bool:
        """Equality of vertex and edge sets, ignoring which side is horizontal."""
        return self.vertices == other.vertices and self.undirected_edges() == other.undirected_edges()

    def transpose(self) -> "BipartiteGraph":
        return BipartiteGraph(
            self.v_vertices, self.h_vertices, frozenset((v, h) for h, v in self.edges)
        )

    def is_connected(self) -> bool:
        verts = self.vertices
        if not verts:
            return True
        start = next(iter(verts))
        seen = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in self._adj[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == len(verts)

    def is_tree(self) -> bool:
        return len(self.edges) == len(self) - 1 and self.is_connected()

    def relabel(self, mapping: dict) -> "BipartiteGraph":
        return BipartiteGraph(
            frozenset(mapping[u] for u in self.h_vertices),
            frozenset(mapping[u] for u in self.v_vertices),
            frozenset((mapping[h], mapping[v]) for h, v in self.edges),
        )

    def induced(self, keep: Iterable[str]) -> "BipartiteGraph":
        keep = set(keep)
        return BipartiteGraph(
            frozenset(self.h_vertices & keep),
            frozenset(self.v_vertices & keep),
            frozenset((h, v) for h, v in self.edges if h in keep and v in keep),
        )


def build_bipartite(h: Iterable[str], v: Iterable[str], edges: Iterable) -> BipartiteGraph:
    h = list(h)
    v = list(v)
    seen = set()
    for label in h + v:
        if not isinstance(label, str) or not label:
            raise DuplicateLabel(f"invalid label {label!r}")
        if label in seen:
            raise DuplicateLabel(label)
        seen.add(label)
    hs, vs = frozenset(h), frozenset(v)
    out = set()
    for a, b in edges:
        if a not in seen or b not in seen:
            raise UnknownEndpoint(a if a not in seen else b)
        if a in hs and b in vs:
            pair = (a, b)
        elif a in vs and b in hs:
            pair = (b, a)
        else:
            raise EdgeWithinPartition((a, b))
        out.add(pair)
    return BipartiteGraph(hs, vs, frozenset(out))


def from_undirected(vertices: Iterable[str], edges: Iterable) -> BipartiteGraph:
    """Derive the bipartition by BFS 2-coloring; each component's smallest label goes to H."""
    vertices = sort_labels(set(vertices))
    adj = {u: [] for u in vertices}
    for a, b in edges:
        if a not in adj or b not in adj:
            raise UnknownEndpoint(a if a not in adj else b)
        if a == b:
            raise EdgeWithinPartition((a, b))
        adj[a].append(b)
        adj[b].append(a)
    color = {}
    for s in vertices:
        if s in color:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in color:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    raise OddCycle((u, w))
    h = [u for u in vertices if color[u] == 0]
    v = [u for u in vertices if color[u] == 1]
    return build_bipartite(h, v, edges)


def _csr(g: BipartiteGraph):
    order = sort_labels(g.vertices)
    index = {u: i for i, u in enumerate(order)}
    indptr = [0]
    indices = []
    for u in order:
        indices.extend(index[w] for w in g.neighbors(u))
        indptr.append(len(indices))
    return len(order), indptr, indices


def girth(g: BipartiteGraph):
    """Length of a shortest cycle, ``math.inf`` for forests."""
    n, indptr, indices = _csr(g)
    best = kernels.girth_csr(n, indptr, indices)
    return INFINITY if best == 0 else best


def girth_bruteforce(g: BipartiteGraph):
    """Independent shortest-cycle oracle: for every edge, BFS between its ends without it."""
    best = INFINITY
    for h, v in g.edges:
        dist = {h: 0}
        queue = deque([h])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if (u, w) in ((h, v), (v, h)):
                    continue
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if v in dist:
            best = min(best, dist[v] + 1)
    return best


# -- named instances ---------------------------------------------------------


def cycle(length: int) -> BipartiteGraph:
    if length < 4 or length % 2:
        raise BadParams(f"cycle length must be even and >= 4, got {length}")
    labels = [str(i) for i in range(length)]
    edges = [(labels[i], labels[(i + 1) % length]) for i in range(length)]
    return from_undirected(labels, edges)


def star(k: int) -> BipartiteGraph:
    if k < 1:
        raise BadParams("star needs at least one leaf")
    labels = [str(i) for i in range(k + 1)]
    return from_undirected(labels, [("0", labels[i]) for i in range(1, k + 1)])


def tree_from_parents(parents) -> BipartiteGraph:
    """``parents[i]`` is the parent index of vertex ``i``; the root has ``-1`` or ``None``."""
    n = len(parents)
    roots = [i for i, p in enumerate(parents) if p is None or p < 0]
    if n == 0 or len(roots) != 1:
        raise BadParams("parents array must have exactly one root")
    edges = []
    for i, p in enumerate(parents):
        if p is None or p < 0:
            continue
        if not 0 <= p < n or p == i:
            raise BadParams(f"bad parent {p} for vertex {i}")
        edges.append((str(i), str(p)))
    g = from_undirected([str(i) for i in range(n)], edges)
    if not g.is_tree():
        raise BadParams("parents array does not form a rooted tree")
    return g


def k33_plus_paths() -> BipartiteGraph:
    """K_{3,3} on a1..a3 x b1..b3 plus, for each i, a path a_i - x_i - y_i - b_i."""
    a = [f"a{i}" for i in (1, 2, 3)]
    b = [f"b{i}" for i in (1, 2, 3)]
    edges = [(ai, bj) for ai, bj in product(a, b)]
    for i in (1, 2, 3):
        edges += [(f"a{i}", f"x{i}"), (f"x{i}", f"y{i}"), (f"y{i}", f"b{i}")]
    h = b + [f"x{i}" for i in (1, 2, 3)]
    v = a + [f"y{i}" for i in (1, 2, 3)]
    return build_bipartite(h, v, edges)


def k33_all_paths() -> BipartiteGraph:
    """K_{3,3} plus a path a_i - x_ij - y_ij - b_j for all nine pairs (i, j)."""
    a = [f"a{i}" for i in (1, 2, 3)]
    b = [f"b{i}" for i in (1, 2, 3)]
    edges = [(ai, bj) for ai, bj in product(a, b)]
    h, v = list(b), list(a)
    for i, j in product((1, 2, 3), repeat=2):
        x, y = f"x{i}{j}", f"y{i}{j}"
        h.append(x)
        v.append(y)
        edges += [(f"a{i}", x), (x, y), (y, f"b{j}")]
    return build_bipartite(h, v, edges)


def s_graph() -> BipartiteGraph:
    """Two 4-cycles a1 c1 a2 c2 and b1 d1 b2 d2 joined by paths a_i - m_i - b_i."""
    h = ["a1", "a2", "b1", "b2"]
    v = ["c1", "c2", "d1", "d2", "m1", "m2"]
    edges = [
        ("a1", "c1"), ("a2", "c1"), ("a1", "c2"), ("a2", "c2"),
        ("b1", "d1"), ("b2", "d1"), ("b1", "d2"), ("b2", "d2"),
        ("a1", "m1"), ("b1", "m1"), ("a2", "m2"), ("b2", "m2"),
    ]
    return build_bipartite(h, v, edges)


def t_family(n: int) -> BipartiteGraph:
    """T_2 is the 16-leaf star; T_n hangs a copy of T_{n-1} below each of 16n+1 root children."""
    if n < 2:
        raise BadParams("t_family needs n >= 2")
    parents = [-1]

    def attach(parent: int, level: int):
        # grows a copy of T_level whose root is the new vertex under ``parent``
        me = len(parents)
        parents.append(parent)
        grow(me, level)

    def grow(root: int, level: int):
        if level == 2:
            for _ in range(16):
                parents.append(root)
            return
        for _ in range(16 * level + 1):
            child = len(parents)
            parents.append(root)
            attach(child, level - 1)

    grow(0, n)
    return tree_from_parents(parents)


def t_family_size(n: int) -> int:
    size = 17
    for m in range(3, n + 1):
        size = 1 + (16 * m + 1) * (1 + size)
    return size


GENERATORS = {
    "cycle": lambda length: cycle(int(length)),
    "star": lambda k: star(int(k)),
    "tree_from_parents": tree_from_parents,
    "k33_plus_paths": k33_plus_paths,
    "k33_all_paths": k33_all_paths,
    "s_graph": s_graph,
    "t_family": lambda n: t_family(int(n)),
}


def generate(name: str, *params) -> BipartiteGraph:
    try:
        fn = GENERATORS[name]
    except KeyError:
        raise BadParams(f"unknown instance {name!r}") from None
    return fn(*params)


def random_tree(n: int, rng) -> BipartiteGraph:
    """Uniform random recursive tree on labels 0..n-1."""
    parents = [-1] + [rng.randrange(i) for i in range(1, n)]
    return tree_from_parents(parents)


def tree_parents(t: BipartiteGraph, root: str):
    """BFS parent map of a tree; raises NotATree."""
    if not t.is_tree():
        raise NotATree("graph is not a tree")
    parent = {root: None}
    order = [root]
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in sort_labels(t.neighbors(u)):
            if w not in parent:
                parent[w] = u
                order.append(w)
                queue.append(w)
    return parent, order
