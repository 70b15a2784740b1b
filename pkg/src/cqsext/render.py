"""Static SVG and TikZ figures of section polyhedra and staircase regions.

Conventions: first lattice coordinate to the right, second upward, light unit
grid, thick dual-cone boundary, shaded region, dashed boundary where the region
is open, dots at minimal generators and lattice points of the region.
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil, floor

from .divisors import mingens, vertex
from .lattice import Cqs
from .regions import (
    StaircaseRegion,
    abelow_region,
    below_region,
    link_region,
    polyhedron_region,
)

REGIONS = {
    "polyhedron": polyhedron_region,
    "below": below_region,
    "abelow": abelow_region,
    "link": link_region,
}


def _to_xy(cqs: Cqs, x, y):
    u = cqs.from_pairing(Fraction(x), Fraction(y))
    return Fraction(u[0]), Fraction(u[1])


def _fmt(v) -> str:
    v = round(float(v), 4)
    return f"{v:g}"


class Figure:
    """Geometry collected in lattice coordinates, emitted as SVG or TikZ."""

    def __init__(self, cqs: Cqs, title: str = ""):
        self.cqs = cqs
        self.title = title
        self.polygons = []   # (points, css-ish color)
        self.segments = []   # (p, q, dashed, color)
        self.dots = []       # (p, radius, color)
        self.labels = []     # (p, text)

    def bbox(self):
        pts = [(Fraction(0), Fraction(0))]
        for poly, _ in self.polygons:
            pts.extend(poly)
        for a, b, _, _ in self.segments:
            pts.extend((a, b))
        for p, _, _ in self.dots:
            pts.append(p)
        x0 = floor(min(p[0] for p in pts)) - 1
        y0 = floor(min(p[1] for p in pts)) - 1
        x1 = ceil(max(p[0] for p in pts)) + 1
        y1 = ceil(max(p[1] for p in pts)) + 1
        return x0, y0, x1, y1

    def to_svg(self, scale: int = 20) -> str:
        x0, y0, x1, y1 = self.bbox()
        w, h = (x1 - x0) * scale, (y1 - y0) * scale

        def tx(p):
            return _fmt((p[0] - x0) * scale), _fmt((y1 - p[1]) * scale)

        out = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
            f'viewBox="0 0 {w} {h}">',
        ]
        if self.title:
            out.append(f"  <title>{self.title}</title>")
        out.append('  <g stroke="#dddddd" stroke-width="0.5">')
        for gx in range(x0, x1 + 1):
            a, b = tx((gx, y0)), tx((gx, y1))
            out.append(f'    <line x1="{a[0]}" y1="{a[1]}" x2="{b[0]}" y2="{b[1]}"/>')
        for gy in range(y0, y1 + 1):
            a, b = tx((x0, gy)), tx((x1, gy))
            out.append(f'    <line x1="{a[0]}" y1="{a[1]}" x2="{b[0]}" y2="{b[1]}"/>')
        out.append("  </g>")
        for poly, color in self.polygons:
            pts = " ".join(",".join(tx(p)) for p in poly)
            out.append(f'  <polygon points="{pts}" fill="{color}" fill-opacity="0.25" stroke="none"/>')
        for a, b, dashed, color in self.segments:
            pa, pb = tx(a), tx(b)
            dash = ' stroke-dasharray="4,3"' if dashed else ""
            out.append(
                f'  <line x1="{pa[0]}" y1="{pa[1]}" x2="{pb[0]}" y2="{pb[1]}" '
                f'stroke="{color}" stroke-width="1.5"{dash}/>'
            )
        for p, r, color in self.dots:
            c = tx(p)
            out.append(f'  <circle cx="{c[0]}" cy="{c[1]}" r="{r}" fill="{color}"/>')
        for p, text in self.labels:
            c = tx(p)
            out.append(f'  <text x="{c[0]}" y="{c[1]}" font-size="9" dx="3" dy="10">{text}</text>')
        out.append("</svg>")
        return "\n".join(out) + "\n"

    def to_tikz(self) -> str:
        x0, y0, x1, y1 = self.bbox()

        def pt(p):
            return f"({_fmt(p[0])},{_fmt(p[1])})"

        out = ["\\begin{tikzpicture}[scale=.7]"]
        out.append(f"\\draw[step=1.0,black!20,thin] ({x0 - 0.5},{y0 - 0.5}) grid ({x1 + 0.5},{y1 + 0.5});")
        for poly, color in self.polygons:
            out.append(f"\\fill[{_tikz_color(color)}!20] " + " -- ".join(pt(p) for p in poly) + " -- cycle;")
        for a, b, dashed, color in self.segments:
            style = f"{_tikz_color(color)}, thick" + (", dashed" if dashed else "")
            out.append(f"\\draw[{style}] {pt(a)} -- {pt(b)};")
        for p, r, color in self.dots:
            out.append(f"\\fill[{_tikz_color(color)}] {pt(p)} circle ({_fmt(r)}pt);")
        for p, text in self.labels:
            out.append(f"\\node[anchor=north west, font=\\tiny] at {pt(p)} {{{text}}};")
        out.append("\\end{tikzpicture}")
        return "\n".join(out) + "\n"


_TIKZ = {"#000000": "black", "#cc0000": "red", "#008800": "green", "#0000cc": "blue"}


def _tikz_color(color: str) -> str:
    return _TIKZ.get(color, "black")


def _cone_boundary(fig: Figure, reach_x, reach_y):
    cqs = fig.cqs
    fig.segments.append(((0, 0), (0, reach_y), False, "#000000"))
    x = min(Fraction(reach_x), Fraction(reach_y * cqs.n, cqs.q))
    fig.segments.append(((0, 0), (x, x * cqs.q / cqs.n), False, "#000000"))


def _column_top(region: StaircaseRegion, caps, x):
    """Largest ``y`` bound on the vertical line at ``x``, or None if the line misses the region."""
    o = region.outer
    if (x <= o.x if o.open_x else x < o.x) or (x >= caps.x if caps.open_x else x > caps.x):
        return None
    top = caps.y
    for c in region.cuts:
        if (c.x < x if c.open_x else c.x <= x) and c.y < top:
            top = c.y
    return top if top >= o.y else None


def _region_outline(fig: Figure, region: StaircaseRegion, color: str):
    """Shade a bounded positive region and stroke its boundary.

    A boundary piece is dashed when its midpoint is not in the region.
    """
    cqs = fig.cqs
    rects = region.rectangles()
    caps = region.derived_caps()
    o = region.outer
    for x0, x1, y0, y1 in rects:
        fig.polygons.append(([_to_xy(cqs, x0, y0), _to_xy(cqs, x1, y0),
                              _to_xy(cqs, x1, y1), _to_xy(cqs, x0, y1)], color))

    def seg(a, b):
        mid = ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
        dashed = not region.contains_pairing(*mid)
        fig.segments.append((_to_xy(cqs, *a), _to_xy(cqs, *b), dashed, color))

    for x0, x1, y0, y1 in rects:
        seg((x0, y0), (x1, y0))
        seg((x0, y1), (x1, y1))
    if region.empty or caps is None:
        return
    left_top = {r[0]: r[3] for r in rects}
    right_top = {r[1]: r[3] for r in rects}
    for xb in sorted(set(left_top) | set(right_top) | {o.x}):
        lo = o.y
        a, b = right_top.get(xb, lo), left_top.get(xb, lo)
        low, high = min(a, b), max(a, b)
        if high > low:
            seg((xb, low), (xb, high))
        col = _column_top(region, caps, xb)
        if col is not None and col > high:
            seg((xb, high), (xb, col))


def render(cqs: Cqs, kind: str, D, fmt: str = "svg", scale: int = 20) -> str:
    """Figure of ``kind`` in ``{polyhedron, below, abelow, link}`` for divisor ``D``."""
    if kind not in REGIONS:
        raise ValueError(f"unknown region kind {kind!r}")
    fig = Figure(cqs, f"{kind} of D=({D[0]},{D[1]}) for n={cqs.n}, q={cqs.q}")
    gens = mingens(cqs, D)
    v = vertex(cqs, D)
    reach_x = max([3, v.x] + [g[0] for g in gens]) + 2
    reach_y = max([3, v.y] + [g[1] for g in gens]) + 2
    _cone_boundary(fig, reach_x, reach_y)
    if kind == "polyhedron":
        ax, ay = cqs.to_pairing(v)
        # corner of the drawn patch: x up to reach_x, second coordinate up to reach_y
        dx = max(reach_x - v.x, 1)
        top = _to_xy(cqs, ax, ay)[1]
        dy = max(reach_y - top, 1) * cqs.n
        pts = [_to_xy(cqs, ax, ay + dy), _to_xy(cqs, ax, ay), _to_xy(cqs, ax + dx, ay)]
        fig.polygons.append(([*pts, _to_xy(cqs, ax + dx, ay + dy)], "#0000cc"))
        fig.segments.append((pts[1], pts[0], False, "#0000cc"))
        fig.segments.append((pts[1], pts[2], False, "#0000cc"))
    else:
        region = REGIONS[kind](cqs, D)
        _region_outline(fig, region, "#cc0000")
        for u in region.lattice_points():
            fig.dots.append(((Fraction(u[0]), Fraction(u[1])), 2, "#0000cc"))
    fig.dots.append(((v.x, v.y), 1.5, "#000000"))
    fig.labels.append(((v.x, v.y), f"vertex ({v.x},{v.y})"))
    for g in gens:
        fig.dots.append(((Fraction(g[0]), Fraction(g[1])), 3, "#008800"))
    return fig.to_svg(scale) if fmt == "svg" else fig.to_tikz()
