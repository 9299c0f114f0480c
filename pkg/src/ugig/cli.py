"""Command-line entry point: ``ugig <verb> ...``.

Exit codes: 0 success or member, 1 negative verdict (non-member, invalid
input object), 2 usage error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
from pathlib import Path

from . import __version__
from .canonical import canonicalize
from .certificate import encode, realize, serialize, verify
from .constructors import FIXTURES, cycle_rep, fixture_rep, tree_rep
from .errors import BudgetExceeded, CapExceeded, InvalidInstance, NotUGIG, SquareTooSmall, UGIGError
from .formats import (
    emit_certificate,
    emit_graph,
    emit_representation,
    emit_roles,
    parse_certificate,
    parse_embedding,
    parse_formula,
    parse_graph,
    parse_representation,
)
from .geometry import RayRepresentation, extract_graph, extract_graph_rays, validate
from .graph import GENERATORS, random_tree, star, t_family
from .recognizer import MEMBER, TIMEOUT, RecognitionQuery, recognize
from .recognizer.classes import CLASS_NAMES
from .recognizer.sat import sat_encode
from .reduction import compile_instance, validate_instance
from .svg import render_svg

OK, NEGATIVE, USAGE, BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _write(text: str, out: str | None):
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _load_graph(spec: str):
    """A graph file, or ``gen:<name>[:param...]`` for a built-in generator."""
    if spec.startswith("gen:"):
        name, *params = spec[4:].split(":")
        if name not in GENERATORS:
            raise UsageError(f"unknown generator {name!r}; choose from {', '.join(sorted(GENERATORS))}")
        return GENERATORS[name](*params)
    return parse_graph(_read(spec))


def _load_rep(path: str):
    return parse_representation(_read(path))


def _extract(rep):
    return extract_graph_rays(rep) if isinstance(rep, RayRepresentation) else extract_graph(rep)


def cmd_validate(args) -> int:
    rep = _load_rep(args.file)
    cls = args.cls.upper()
    if isinstance(rep, RayRepresentation):
        bad = []
        if cls in ("2DORG", "2-DORG"):
            bad = [k for k, r in sorted(rep.rays.items()) if r.direction not in "RU"]
        elif cls != "ORG":
            raise UsageError(f"ray input can only be validated as org or 2dorg, not {args.cls}")
        for k in bad:
            print(f"DirectionNotAllowed {k}")
        print("valid" if not bad else "invalid")
        return OK if not bad else NEGATIVE
    if cls == "USEG":
        report = min((validate(rep, c) for c in ("USEG_H", "USEG_V")), key=lambda r: len(r.violations))
    else:
        names = {"ORG_CLIPPED": "ORG_clipped"}
        report = validate(rep, names.get(cls, cls))
    for v in report.violations:
        print(f"{v.kind} {' '.join(map(str, v.vertices))} {v.detail}".rstrip())
    print("valid" if report.valid else "invalid")
    return OK if report.valid else NEGATIVE


def cmd_extract(args) -> int:
    _write(emit_graph(_extract(_load_rep(args.file))), args.out)
    return OK


def cmd_canonicalize(args) -> int:
    try:
        rep = canonicalize(_load_rep(args.file))
    except NotUGIG as exc:
        print(f"error: {exc}", file=sys.stderr)
        return NEGATIVE
    _write(emit_representation(rep), args.out)
    return OK


def cmd_certify(args) -> int:
    cert = encode(_load_rep(args.file))
    if args.graph:
        report = verify(cert, _load_graph(args.graph))
        for v in report.violations:
            print(f"{v.kind} {' '.join(map(str, v.vertices))}", file=sys.stderr)
        if not report.valid:
            return NEGATIVE
    if args.binary:
        Path(args.binary).write_bytes(serialize(cert))
    _write(emit_certificate(cert), args.out)
    return OK


def cmd_realize(args) -> int:
    cert = parse_certificate(_read(args.file))
    _write(emit_representation(realize(cert, args.mode)), args.out)
    return OK


def cmd_recognize(args) -> int:
    g = _load_graph(args.graph)
    solver = args.solver_cmd or os.environ.get("UGIG_SOLVER") or None
    if args.export_cnf:
        enc = sat_encode(g, args.cls)
        Path(args.export_cnf).write_text(enc.to_dimacs())
        Path(args.export_cnf + ".map").write_text(enc.varmap_text())
    q = RecognitionQuery(g, args.cls, args.engine, args.budget, solver)
    res = recognize(q)
    print(f"verdict: {res.verdict}")
    print(f"class: {res.cls}  engine: {res.engine}  elapsed: {res.elapsed:.3f}s")
    if res.verdict == TIMEOUT:
        return BUDGET
    if res.verdict != MEMBER:
        return NEGATIVE
    if res.certificate is not None:
        print(emit_certificate(res.certificate), end="")
    if args.out:
        _write(emit_representation(res.representation), args.out)
    else:
        print(emit_representation(res.representation), end="")
    return OK


def cmd_construct(args) -> int:
    kind = args.kind
    if kind == "cycle":
        rep = cycle_rep(args.n, args.layout, args.eps)
    elif kind == "star":
        rep = tree_rep(star(args.n))
    elif kind == "tfamily":
        rep = tree_rep(t_family(args.n))
    elif kind == "tree":
        if args.graph:
            t = _load_graph(args.graph)
        else:
            t = random_tree(args.n, random.Random(args.seed))
        rep = tree_rep(t)
    else:
        if args.name not in FIXTURES:
            raise UsageError(f"--name must be one of {', '.join(FIXTURES)}")
        rep = fixture_rep(args.name)
    _write(emit_representation(rep), args.out)
    return OK


def cmd_reduce(args) -> int:
    f = parse_formula(_read(args.formula))
    r = parse_embedding(_read(args.embedding))
    report = validate_instance(f, r)
    if not report.valid:
        for v in report.violations:
            print(f"{v.kind} {' '.join(v.vertices)} {v.detail}".rstrip(), file=sys.stderr)
        return NEGATIVE
    gg = compile_instance(f, r, args.girth)
    _write(emit_graph(gg.graph), args.out)
    if args.roles:
        Path(args.roles).write_text(emit_roles(gg.roles))
    m = gg.meta
    print(
        f"vertices {len(gg.graph.vertices)} predicted {m['predicted_vertices']} girth {m['girth']} "
        f"jigsaw {m['jigsaw']} occurrence {m['occurrence_length']}",
        file=sys.stderr,
    )
    return OK


def cmd_render(args) -> int:
    _write(render_svg(_load_rep(args.file), title=Path(args.file).name), args.out)
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ugig", description="Unit grid intersection graph toolkit.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("validate", help="check a representation against a class")
    s.add_argument("file")
    s.add_argument("--class", dest="cls", default="ugig", help="gig, ugig, useg, useg_h, useg_v, org, 2dorg")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("extract", help="intersection graph of a representation")
    s.add_argument("file")
    s.add_argument("--out")
    s.set_defaults(func=cmd_extract)

    s = sub.add_parser("canonicalize", help="grid-aligned unit representation")
    s.add_argument("file")
    s.add_argument("--out")
    s.set_defaults(func=cmd_canonicalize)

    s = sub.add_parser("certify", help="certificate of a representation")
    s.add_argument("file")
    s.add_argument("--graph", help="also verify the certificate against this graph")
    s.add_argument("--binary", help="write the compact binary encoding here")
    s.add_argument("--out")
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("realize", help="representation from a certificate")
    s.add_argument("file")
    s.add_argument("--mode", default="both", choices=("both", "horizontal_only", "vertical_only", "none"))
    s.add_argument("--out")
    s.set_defaults(func=cmd_realize)

    s = sub.add_parser("recognize", help="decide class membership")
    s.add_argument("graph", help="graph file or gen:<name>[:param]")
    s.add_argument("--class", dest="cls", default="ugig", help=", ".join(CLASS_NAMES))
    s.add_argument("--engine", default="sat", choices=("sat", "backtrack"))
    s.add_argument("--solver-cmd", help="external DIMACS solver command (default $UGIG_SOLVER)")
    s.add_argument("--export-cnf", metavar="PATH", help="also write the DIMACS encoding")
    s.add_argument("--budget", type=float, default=120.0, help="seconds")
    s.add_argument("--out", help="write the witness representation here")
    s.set_defaults(func=cmd_recognize)

    s = sub.add_parser("construct", help="build a representation")
    s.add_argument("kind", choices=("cycle", "tree", "star", "tfamily", "fixture"))
    s.add_argument("--n", type=int, default=4, help="cycle length, star leaves, tree size or family index")
    s.add_argument("--layout", default="rectangle", choices=("rectangle", "square"))
    s.add_argument("--eps", default="1/2")
    s.add_argument("--graph", help="tree file for 'tree'")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--name", help="fixture name: " + ", ".join(FIXTURES))
    s.add_argument("--out")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("reduce", help="compile a formula into a gadget graph")
    s.add_argument("formula")
    s.add_argument("embedding")
    s.add_argument("--girth", type=int, default=4)
    s.add_argument("--roles", help="write the role sidecar here")
    s.add_argument("--out")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("render", help="SVG drawing of a representation")
    s.add_argument("file")
    s.add_argument("--out")
    s.set_defaults(func=cmd_render)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args)
    except (UsageError, CapExceeded) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return BUDGET
    except (InvalidInstance, SquareTooSmall) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return NEGATIVE
    except UGIGError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
