"""Combinatorial certificates: the two endpoint orders of an arrangement."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import (
    InconsistentCertificate,
    MalformedBytes,
    NotProper,
    PopulationMismatch,
)
from .geometry import HORIZONTAL, GridRepresentation, OrthoSegment, Report, Violation
from .graph import BipartiteGraph, label_key, sort_labels

KIND_RANK = {"L": 0, "P": 1, "R": 2}
MODES = ("both", "horizontal_only", "vertical_only", "none")


class Token(NamedTuple):
    owner: str
    kind: str  # L, R or P

    def __str__(self):
        return f"{self.owner}.{self.kind}"

    @classmethod
    def parse(cls, text: str) -> "Token":
        owner, _, kind = text.rpartition(".")
        if not owner or kind not in KIND_RANK:
            raise InconsistentCertificate(f"bad token {text!r}")
        return cls(owner, kind)


@dataclass(frozen=True)
class Certificate:
    lx: tuple
    ly: tuple

    def __post_init__(self):
        object.__setattr__(self, "lx", tuple(Token(*t) for t in self.lx))
        object.__setattr__(self, "ly", tuple(Token(*t) for t in self.ly))
        _check_axis(self.lx, "x")
        _check_axis(self.ly, "y")
        for a, b, name in ((self.lx, self.ly, "x"), (self.ly, self.lx, "y")):
            intervals = {t.owner for t in a if t.kind == "L"}
            points = {t.owner for t in b if t.kind == "P"}
            if intervals != points:
                raise InconsistentCertificate(f"interval owners on {name} do not match the points on the other axis")

    @property
    def h_vertices(self) -> frozenset:
        return frozenset(t.owner for t in self.lx if t.kind == "L")

    @property
    def v_vertices(self) -> frozenset:
        return frozenset(t.owner for t in self.ly if t.kind == "L")

    def __len__(self):
        return len(self.h_vertices) + len(self.v_vertices)

    def implied_graph(self) -> BipartiteGraph:
        """The graph whose adjacencies this arrangement describes."""
        px = {t: i for i, t in enumerate(self.lx)}
        py = {t: i for i, t in enumerate(self.ly)}
        edges = set()
        for h in self.h_vertices:
            for v in self.v_vertices:
                if _inside(px, h, v) and _inside(py, v, h):
                    edges.add((h, v))
        return BipartiteGraph(self.h_vertices, self.v_vertices, frozenset(edges))

    def to_text(self) -> str:
        return "X: " + " ".join(map(str, self.lx)) + "\nY: " + " ".join(map(str, self.ly)) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Certificate":
        axes = {}
        current = None
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if line[:2] in ("X:", "Y:"):
                current = line[0]
                axes[current] = []
                line = line[2:]
            if current is None:
                raise InconsistentCertificate("token before X:/Y: header")
            axes[current].extend(Token.parse(w) for w in line.split())
        if set(axes) != {"X", "Y"}:
            raise InconsistentCertificate("certificate needs X: and Y: lines")
        return cls(tuple(axes["X"]), tuple(axes["Y"]))


def _check_axis(tokens, axis):
    seen = set()
    opened = set()
    for t in tokens:
        if t.kind not in KIND_RANK:
            raise InconsistentCertificate(f"bad kind in {t}")
        if t in seen:
            raise InconsistentCertificate(f"duplicate token {t} on {axis}")
        seen.add(t)
        if t.kind == "L":
            opened.add(t.owner)
        elif t.kind == "R" and t.owner not in opened:
            raise InconsistentCertificate(f"{t} precedes its left end on {axis}")
    intervals = {t.owner for t in tokens if t.kind == "L"}
    points = {t.owner for t in tokens if t.kind == "P"}
    closed = {t.owner for t in tokens if t.kind == "R"}
    if closed != intervals:
        raise InconsistentCertificate(f"unmatched interval ends on {axis}")
    if intervals & points:
        raise InconsistentCertificate(f"owner is both interval and point on {axis}")


def _inside(pos, interval_owner, point_owner) -> bool:
    return pos[Token(interval_owner, "L")] < pos[Token(point_owner, "P")] < pos[Token(interval_owner, "R")]


def encode(rep: GridRepresentation) -> Certificate:
    """Order tokens by exact coordinate; ties broken L < P < R, then by owner label."""
    xs, ys = [], []
    for k, s in rep.segments.items():
        if s.orientation == HORIZONTAL:
            xs += [(s.x0, "L", k), (s.x1, "R", k)]
            ys.append((s.y, "P", k))
        else:
            ys += [(s.y0, "L", k), (s.y1, "R", k)]
            xs.append((s.x, "P", k))

    def order(items):
        items.sort(key=lambda e: (e[0], KIND_RANK[e[1]], label_key(e[2])))
        return tuple(Token(k, kind) for _, kind, k in items)

    return Certificate(order(xs), order(ys))


def verify(cert: Certificate, g: BipartiteGraph) -> Report:
    if cert.h_vertices != g.h_vertices or cert.v_vertices != g.v_vertices:
        raise PopulationMismatch("certificate tokens do not match the graph's partition")
    if {t.owner for t in cert.lx if t.kind == "P"} != g.v_vertices or {
        t.owner for t in cert.ly if t.kind == "P"
    } != g.h_vertices:
        raise PopulationMismatch("point tokens do not match the graph's partition")
    implied = cert.implied_graph()
    report = Report()
    for h in g.sorted_h():
        for v in g.sorted_v():
            want = g.has_edge(h, v)
            got = implied.has_edge(h, v)
            if want and not got:
                report.violations.append(Violation("MissingAdjacency", (h, v)))
            elif got and not want:
                report.violations.append(Violation("ExtraAdjacency", (h, v)))
    return report


def _nested_pair(tokens):
    # proper iff right ends come in the same order as left ends
    lefts = [t.owner for t in tokens if t.kind == "L"]
    rights = [t.owner for t in tokens if t.kind == "R"]
    if lefts == rights:
        return None
    rank = {o: i for i, o in enumerate(lefts)}
    for i, o in enumerate(rights):
        for later in rights[i + 1:]:
            if rank[later] < rank[o]:
                return later, o  # ``o`` sits inside ``later``
    return None


def is_proper(cert: Certificate, mode: str = "both") -> bool:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if mode in ("both", "horizontal_only") and _nested_pair(cert.lx):
        return False
    if mode in ("both", "vertical_only") and _nested_pair(cert.ly):
        return False
    return True


def _rank_axis(tokens) -> dict:
    return {t: Fraction(i) for i, t in enumerate(tokens)}


def _unit_axis(tokens) -> dict:
    """Appendix-style sweep giving every interval length exactly 1."""
    n = len(tokens)
    pos = {t: i for i, t in enumerate(tokens)}
    coord = [None] * n
    pending = deque()  # positions of right ends fixed ahead of the sweep
    cur = -1

    def open_interval(p):
        q = pos[Token(tokens[p].owner, "R")]
        coord[q] = coord[p] + 1
        if pending and q <= pending[-1]:
            raise NotProper(f"{tokens[p].owner} nests inside an earlier interval")
        pending.append(q)

    while cur < n - 1:
        if pending:
            q = pending[0]
            interior = range(cur + 1, q)
            c, d = coord[cur], coord[q]
            m = len(interior)
            for k, p in enumerate(interior, start=1):
                tok = tokens[p]
                if tok.kind == "R":
                    raise NotProper(f"{tok.owner} closes inside a later interval")
                coord[p] = c + (d - c) * Fraction(k, m + 1)
                if tok.kind == "L":
                    open_interval(p)
            pending.popleft()
            cur = q
        else:
            p = cur + 1
            tok = tokens[p]
            if tok.kind == "R":
                raise InconsistentCertificate(f"unexpected right end {tok}")
            # nothing is pending, so the last assigned token is the rightmost one
            coord[p] = Fraction(0) if cur < 0 else coord[cur] + 1
            if tok.kind == "L":
                open_interval(p)
            cur = p
    return {t: coord[i] for i, t in enumerate(tokens)}


def realize(cert: Certificate, mode: str = "both") -> GridRepresentation:
    """Exact coordinates respecting both orders.

    ``mode`` picks which sides get unit length: ``both`` (UGIG),
    ``horizontal_only``/``vertical_only`` (USEG) or ``none`` (GIG, rank coordinates).
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if not is_proper(cert, mode):
        raise NotProper("certificate has nested intervals on a unit side")
    cx = _unit_axis(cert.lx) if mode in ("both", "horizontal_only") else _rank_axis(cert.lx)
    cy = _unit_axis(cert.ly) if mode in ("both", "vertical_only") else _rank_axis(cert.ly)
    segs = {}
    for h in cert.h_vertices:
        x0, x1 = cx[Token(h, "L")], cx[Token(h, "R")]
        segs[h] = OrthoSegment("H", x0, cy[Token(h, "P")], x1 - x0)
    for v in cert.v_vertices:
        y0, y1 = cy[Token(v, "L")], cy[Token(v, "R")]
        segs[v] = OrthoSegment("V", cx[Token(v, "P")], y0, y1 - y0)
    return GridRepresentation(segs, cert.h_vertices, cert.v_vertices)


def realize_unit(cert: Certificate) -> GridRepresentation:
    return realize(cert, "both")


def _axis_feasible(tokens) -> bool:
    # difference constraints on integer-scaled variables: slack 1, unit length S
    t = len(tokens)
    if t < 2:
        return True
    scale = 4 * t
    var = {}
    offset = []
    ids = []
    for tok in tokens:
        key = tok.owner
        ids.append(var.setdefault(key, len(var)))
        offset.append(scale if tok.kind == "R" else 0)
    edges = []
    for a in range(t - 1):
        b = a + 1
        # value(b) - value(a) >= 1  <=>  x_a - x_b <= off_b - off_a - 1
        edges.append((ids[b], ids[a], offset[b] - offset[a] - 1))
    nv = len(var)
    dist = [0] * nv
    for _ in range(nv):
        changed = False
        for u, w, c in edges:
            if dist[u] + c < dist[w]:
                dist[w] = dist[u] + c
                changed = True
        if not changed:
            return True
    return False


def feasibility_oracle(cert: Certificate) -> bool:
    """Decide unit realizability of both orders through negative-cycle detection."""
    return _axis_feasible(cert.lx) and _axis_feasible(cert.ly)


# -- binary form -------------------------------------------------------------

MAGIC = b"UGC1"
KIND_CODE = {"L": 0, "R": 1, "P": 2}
CODE_KIND = {v: k for k, v in KIND_CODE.items()}

# serialized size stays below SIZE_CONSTANT * n * log2(n + 1) bits for labels of O(log n) characters
SIZE_CONSTANT = 12


def _varint(n: int) -> bytes:
    out = bytearray()
    while True:
        b = n & 0x7F
        n >>= 7
        if n:
            out.append(b | 0x80)
        else:
            out.append(b)
            return bytes(out)


def _read_varint(data: bytes, i: int):
    shift = 0
    value = 0
    while True:
        if i >= len(data):
            raise MalformedBytes("truncated varint")
        b = data[i]
        i += 1
        value |= (b & 0x7F) << shift
        if not b & 0x80:
            return value, i
        shift += 7
        if shift > 63:
            raise MalformedBytes("varint too long")


def serialize(cert: Certificate) -> bytes:
    owners = sort_labels(cert.h_vertices | cert.v_vertices)
    index = {o: i for i, o in enumerate(owners)}
    width = max(1, (len(owners) - 1).bit_length())
    out = bytearray(MAGIC)
    out += _varint(len(owners))
    for o in owners:
        raw = o.encode("utf-8")
        out += _varint(len(raw)) + raw
    out += _varint(len(cert.lx)) + _varint(len(cert.ly))
    acc = 0
    nbits = 0
    for tok in cert.lx + cert.ly:
        acc = (acc << (width + 2)) | (index[tok.owner] << 2) | KIND_CODE[tok.kind]
        nbits += width + 2
    pad = (-nbits) % 8
    acc <<= pad
    out += acc.to_bytes((nbits + pad) // 8, "big") if nbits else b""
    return bytes(out)


def deserialize(data: bytes) -> Certificate:
    if not data.startswith(MAGIC):
        raise MalformedBytes("missing magic header")
    i = len(MAGIC)
    count, i = _read_varint(data, i)
    owners = []
    for _ in range(count):
        ln, i = _read_varint(data, i)
        if i + ln > len(data):
            raise MalformedBytes("truncated label")
        try:
            owners.append(data[i:i + ln].decode("utf-8"))
        except UnicodeDecodeError as exc:
            raise MalformedBytes("label is not UTF-8") from exc
        i += ln
    nx, i = _read_varint(data, i)
    ny, i = _read_varint(data, i)
    width = max(1, (count - 1).bit_length())
    nbits = (nx + ny) * (width + 2)
    nbytes = (nbits + 7) // 8
    if len(data) - i != nbytes:
        raise MalformedBytes("token stream has the wrong length")
    acc = int.from_bytes(data[i:], "big") >> (nbytes * 8 - nbits) if nbits else 0
    tokens = []
    mask = (1 << (width + 2)) - 1
    for k in range(nx + ny):
        word = (acc >> ((nx + ny - 1 - k) * (width + 2))) & mask
        idx, code = word >> 2, word & 3
        if idx >= count or code not in CODE_KIND:
            raise MalformedBytes("token out of range")
        tokens.append(Token(owners[idx], CODE_KIND[code]))
    try:
        return Certificate(tuple(tokens[:nx]), tuple(tokens[nx:]))
    except InconsistentCertificate as exc:
        raise MalformedBytes(str(exc)) from exc


def size_budget_bits(n: int) -> float:
    return SIZE_CONSTANT * n * math.log2(n + 1)


# -- random certificates -----------------------------------------------------


def _random_axis(intervals, points, rng, proper=True):
    intervals = list(intervals)
    rng.shuffle(intervals)
    seq = []
    open_ = deque()
    remaining = deque(intervals)
    while remaining or open_:
        if remaining and (not open_ or rng.random() < 0.5):
            o = remaining.popleft()
            seq.append(Token(o, "L"))
            open_.append(o)
        else:
            if proper:
                o = open_.popleft()
            else:
                o = open_[rng.randrange(len(open_))]
                open_.remove(o)
            seq.append(Token(o, "R"))
    for p in points:
        seq.insert(rng.randrange(len(seq) + 1), Token(p, "P"))
    return tuple(seq)


def random_certificate(nh: int, nv: int, rng, proper=True, prefix=("h", "v")) -> Certificate:
    hs = [f"{prefix[0]}{i}" for i in range(nh)]
    vs = [f"{prefix[1]}{i}" for i in range(nv)]
    return Certificate(_random_axis(hs, vs, rng, proper), _random_axis(vs, hs, rng, proper))


def nest_corrupt(cert: Certificate, rng) -> Certificate:
    """Move one right end so that some interval swallows a later one."""
    axes = [a for a in ("x", "y") if sum(t.kind == "L" for t in getattr(cert, "l" + a)) >= 2]
    if not axes:
        raise ValueError("no axis with two intervals")
    axis = rng.choice(axes)
    tokens = list(getattr(cert, "l" + axis))
    lefts = [t.owner for t in tokens if t.kind == "L"]
    i = rng.randrange(len(lefts) - 1)
    j = rng.randrange(i + 1, len(lefts))
    outer, inner = lefts[i], lefts[j]
    rt = Token(outer, "R")
    tokens.remove(rt)
    tokens.insert(tokens.index(Token(inner, "R")) + 1, rt)
    if axis == "x":
        return Certificate(tuple(tokens), cert.ly)
    return Certificate(cert.lx, tuple(tokens))
