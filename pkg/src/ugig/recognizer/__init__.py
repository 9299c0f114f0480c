"""Exact class membership by searching the space of endpoint orders."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from ..certificate import Certificate, is_proper, realize
from ..errors import BadParams, BudgetExceeded, CapExceeded, UGIGError
from ..geometry import extract_graph, extract_graph_rays, validate
from ..graph import BipartiteGraph
from . import backtrack, sat
from .classes import CHAIN, CLASS_NAMES, is_ray_class, normalize_class
from .crossfree import cross_free_search, has_cross
from .sat import decode_model, expected_clause_count, sat_encode

MEMBER, NON_MEMBER, TIMEOUT = "member", "non_member", "timeout"
ENGINES = ("sat", "backtrack")
DEFAULT_BUDGET = 120.0


@dataclass(frozen=True)
class RecognitionQuery:
    graph: BipartiteGraph
    cls: str
    engine: str = "sat"
    budget: float = DEFAULT_BUDGET
    solver_cmd: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "cls", normalize_class(self.cls))
        if self.engine not in ENGINES:
            raise BadParams(f"unknown engine {self.engine!r}")
        if self.budget is not None and self.budget <= 0:
            raise BadParams("budget must be positive")


@dataclass
class RecognitionResult:
    verdict: str
    cls: str
    engine: str
    certificate: Certificate | None = None
    representation: object = None  # GridRepresentation or RayRepresentation
    elapsed: float = 0.0
    notes: dict = field(default_factory=dict)

    @property
    def member(self) -> bool:
        return self.verdict == MEMBER


def _mode_for(cls: str, cert: Certificate) -> tuple[str, str]:
    """Realization mode and validation class for a segment certificate."""
    if cls == "GIG":
        return "none", "GIG"
    if cls == "UGIG":
        return "both", "UGIG"
    if is_proper(cert, "horizontal_only"):
        return "horizontal_only", "USEG_H"
    return "vertical_only", "USEG_V"


def witness_ok(g: BipartiteGraph, result: RecognitionResult) -> bool:
    """Re-check a member verdict from scratch."""
    rep = result.representation
    if rep is None:
        return False
    if is_ray_class(result.cls):
        if result.cls == "2DORG" and any(r.direction not in "RU" for r in rep.rays.values()):
            return False
        return extract_graph_rays(rep) == g
    _, vclass = _mode_for(result.cls, result.certificate)
    return validate(rep, vclass).valid and extract_graph(rep) == g


def _segment_witness(g, cls, cert):
    mode, _ = _mode_for(cls, cert)
    return realize(cert, mode)


def _run_sat(q: RecognitionQuery):
    enc = sat_encode(q.graph, q.cls)
    model = sat.solve(enc, budget=q.budget, solver_cmd=q.solver_cmd)
    notes = {"vars": enc.nvars, "clauses": len(enc.clauses)}
    if model is None:
        return None, None, notes
    found = decode_model(enc, model)
    if is_ray_class(q.cls):
        return None, found, notes
    return found, _segment_witness(q.graph, q.cls, found), notes


def _run_backtrack(q: RecognitionQuery):
    g = q.graph
    if max(len(g.h_vertices), len(g.v_vertices)) > backtrack.DEFAULT_CAP:
        raise CapExceeded(f"backtracking is limited to {backtrack.DEFAULT_CAP} vertices per side")
    if is_ray_class(q.cls):
        rays = backtrack.search_rays(g, q.cls == "2DORG", q.budget)
        return None, rays, {}
    deadline = None if q.budget is None else time.monotonic() + q.budget
    if q.cls == "GIG":
        modes = [(False, False)]
    elif q.cls == "UGIG":
        modes = [(True, True)]
    else:
        modes = [(True, False), (False, True)]
    for fx, fy in modes:
        left = None if deadline is None else max(deadline - time.monotonic(), 1e-3)
        cert = backtrack.search_segments(g, fx, fy, left)
        if cert is not None:
            return cert, _segment_witness(g, q.cls, cert), {}
    return None, None, {}


def recognize(q=None, *, graph=None, cls=None, engine="sat", budget=DEFAULT_BUDGET, solver_cmd=None):
    """Decide membership; accepts a RecognitionQuery or keyword arguments."""
    if q is None:
        q = RecognitionQuery(graph, cls, engine, budget, solver_cmd)
    start = time.monotonic()
    try:
        run = _run_sat if q.engine == "sat" else _run_backtrack
        cert, rep, notes = run(q)
    except BudgetExceeded:
        return RecognitionResult(TIMEOUT, q.cls, q.engine, elapsed=time.monotonic() - start)
    verdict = MEMBER if rep is not None else NON_MEMBER
    result = RecognitionResult(verdict, q.cls, q.engine, cert, rep, time.monotonic() - start, notes)
    if verdict == MEMBER and not witness_ok(q.graph, result):
        raise UGIGError(f"witness for {q.cls} failed re-validation")
    return result


__all__ = [
    "CHAIN", "CLASS_NAMES", "ENGINES", "MEMBER", "NON_MEMBER", "TIMEOUT",
    "RecognitionQuery", "RecognitionResult", "cross_free_search", "decode_model",
    "expected_clause_count", "has_cross", "recognize", "sat_encode", "witness_ok",
]
