"""SVG rendering of segment and ray representations (presentation only)."""

from __future__ import annotations

from fractions import Fraction
from xml.sax.saxutils import escape, quoteattr

from .geometry import GridRepresentation, RayRepresentation

TARGET = 400  # longest side of the drawing in SVG user units
STYLE = (
    ".h{stroke:#1f5fa8;stroke-width:2}"
    ".v{stroke:#b8461b;stroke-width:2}"
    ".ray{stroke-dasharray:none}"
)


def _num(q: Fraction) -> str:
    return f"{float(q):.4f}".rstrip("0").rstrip(".")


def _box(points):
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    return min(xs), min(ys), max(xs), max(ys)


def _segments_for(rep):
    """(label, orientation, x0, y0, x1, y1, is_ray) in plane coordinates."""
    if isinstance(rep, GridRepresentation):
        rows = [(k, s.orientation, s.x0, s.y0, s.x1, s.y1, False) for k, s in sorted(rep.segments.items())]
        return rows, _box([(r[2], r[3]) for r in rows] + [(r[4], r[5]) for r in rows])
    if isinstance(rep, RayRepresentation):
        lo_x, lo_y, hi_x, hi_y = _box([(r.x, r.y) for r in rep.rays.values()])
        lo_x, lo_y, hi_x, hi_y = lo_x - 1, lo_y - 1, hi_x + 1, hi_y + 1
        ends = {"R": lambda r: (hi_x, r.y), "L": lambda r: (lo_x, r.y), "U": lambda r: (r.x, hi_y), "D": lambda r: (r.x, lo_y)}
        rows = []
        for k, r in sorted(rep.rays.items()):
            ex, ey = ends[r.direction](r)
            rows.append((k, r.orientation, r.x, r.y, ex, ey, True))
        return rows, (lo_x, lo_y, hi_x, hi_y)
    raise TypeError(f"cannot render {type(rep).__name__}")


def render_svg(rep, title: str = "") -> str:
    rows, (lo_x, lo_y, hi_x, hi_y) = _segments_for(rep)
    span = max(hi_x - lo_x, hi_y - lo_y) or Fraction(1)
    scale = Fraction(TARGET) / span
    pad = 10
    width = (hi_x - lo_x) * scale + 2 * pad
    height = (hi_y - lo_y) * scale + 2 * pad

    def sx(x):
        return _num((x - lo_x) * scale + pad)

    def sy(y):  # SVG's y axis points down
        return _num((hi_y - y) * scale + pad)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_num(width)}" height="{_num(height)}" '
        f'viewBox="0 0 {_num(width)} {_num(height)}" data-scale="{scale.numerator}/{scale.denominator}" '
        f'data-origin="{lo_x},{hi_y}">',
        f"<metadata>scale={scale.numerator}/{scale.denominator} origin=({lo_x},{hi_y})</metadata>",
        f"<style>{STYLE}</style>",
    ]
    if title:
        out.append(f"<title>{escape(title)}</title>")
    if any(r[6] for r in rows):
        out.append(
            '<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="6" markerHeight="6" '
            'orient="auto-start-reverse"><path d="M0,0 L10,5 L0,10 z"/></marker></defs>'
        )
    for label, orient, x0, y0, x1, y1, is_ray in rows:
        cls = "h" if orient == "H" else "v"
        extra = ' marker-end="url(#arrow)"' if is_ray else ""
        if is_ray:
            cls += " ray"
        out.append(
            f'<line class="{cls}" data-id={quoteattr(label)} x1="{sx(x0)}" y1="{sy(y0)}" '
            f'x2="{sx(x1)}" y2="{sy(y1)}"{extra}/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
