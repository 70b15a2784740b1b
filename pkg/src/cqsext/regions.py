"""Staircase regions: a shifted quadrant, optionally capped, minus shifted quadrants.

All constraints are stored in pairing coordinates ``(x, y) = (<p, rho0>, <p, rho1>)``
where every cone used here is an axis-parallel quadrant.  A region is

    {x >(=) outer_x, y >(=) outer_y, x <(=) cap_x, y <(=) cap_y}
        minus  the union over cuts of {x >(=) c_x, y >(=) c_y}

possibly negated (``orientation == -1`` means the point set is ``-R``).  Each
facet carries its own open/closed flag.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import ceil, floor
from typing import NamedTuple, Optional

from . import kernels
from .divisors import mingens_pairing, vertex
from .lattice import Cqs, LatticeVector, RationalVector


class Bound(NamedTuple):
    """A facet pair ``(x, y)`` with per-facet openness."""

    x: Fraction
    y: Fraction
    open_x: bool = False
    open_y: bool = False

    def shifted(self, dx, dy) -> "Bound":
        return Bound(self.x + dx, self.y + dy, self.open_x, self.open_y)


def _lower_ok(value, bound, is_open):
    return value > bound if is_open else value >= bound


def _upper_ok(value, bound, is_open):
    return value < bound if is_open else value <= bound


def _int_lower(bound, is_open):
    # smallest integer v with v > bound (open) or v >= bound (closed)
    return floor(bound) + 1 if is_open else ceil(bound)


def _int_upper(bound, is_open):
    return ceil(bound) - 1 if is_open else floor(bound)


def _implies(a, a_open, c, c_open):
    """Does ``v >(=) a`` force ``v >(=) c``?"""
    if c_open:
        return a > c or (a == c and a_open)
    return a >= c


@dataclass(frozen=True)
class StaircaseRegion:
    cqs: Cqs
    outer: Bound
    cuts: tuple = ()
    caps: Optional[Bound] = None
    orientation: int = 1
    empty: bool = False
    name: str = field(default="", compare=False)

    # construction helpers

    @classmethod
    def nothing(cls, cqs: Cqs, name: str = "") -> "StaircaseRegion":
        return cls(cqs, Bound(Fraction(0), Fraction(0)), empty=True, name=name)

    def translate(self, t) -> "StaircaseRegion":
        """The region shifted by the vector ``t`` of ``M_Q``."""
        tx, ty = self.cqs.to_pairing(t)
        return self.translate_pairing(tx, ty)

    def translate_pairing(self, tx, ty) -> "StaircaseRegion":
        if self.empty:
            return self
        # -R + t = -(R - t)
        dx, dy = (tx, ty) if self.orientation == 1 else (-tx, -ty)
        return replace(
            self,
            outer=self.outer.shifted(dx, dy),
            cuts=tuple(c.shifted(dx, dy) for c in self.cuts),
            caps=None if self.caps is None else self.caps.shifted(dx, dy),
        )

    def negate(self) -> "StaircaseRegion":
        return replace(self, orientation=-self.orientation)

    def intersect(self, other: "StaircaseRegion") -> "StaircaseRegion":
        if self.orientation != other.orientation:
            raise ValueError("cannot intersect regions of opposite orientation")
        if self.empty or other.empty:
            return StaircaseRegion.nothing(self.cqs)
        return replace(
            self,
            outer=_tighter(self.outer, other.outer, lower=True),
            caps=(
                self.caps if other.caps is None
                else other.caps if self.caps is None
                else _tighter(self.caps, other.caps, lower=False)
            ),
            cuts=self.cuts + other.cuts,
            name="",
        )

    # queries

    @property
    def outer_apex(self) -> RationalVector:
        return RationalVector(*self.cqs.from_pairing(Fraction(self.outer.x), Fraction(self.outer.y)))

    def contains_pairing(self, x, y) -> bool:
        if self.empty:
            return False
        if self.orientation == -1:
            x, y = -x, -y
        o = self.outer
        if not (_lower_ok(x, o.x, o.open_x) and _lower_ok(y, o.y, o.open_y)):
            return False
        c = self.caps
        if c is not None and not (_upper_ok(x, c.x, c.open_x) and _upper_ok(y, c.y, c.open_y)):
            return False
        for cut in self.cuts:
            if _lower_ok(x, cut.x, cut.open_x) and _lower_ok(y, cut.y, cut.open_y):
                return False
        return True

    def contains(self, u) -> bool:
        """Exact membership of a point of ``M_Q``."""
        return self.contains_pairing(*self.cqs.to_pairing(u))

    def __contains__(self, u) -> bool:
        return self.contains(u)

    def derived_caps(self) -> Optional[Bound]:
        """Upper bounds forced by the caps and by cuts that span the outer facet."""
        o = self.outer
        cx = cy = None
        ox = oy = False
        if self.caps is not None:
            cx, cy, ox, oy = self.caps
        for cut in self.cuts:
            if _implies(o.x, o.open_x, cut.x, cut.open_x):
                # every point has x in the cut range, so y must avoid it
                if cy is None or cut.y < cy or (cut.y == cy and not cut.open_y and not oy):
                    cy, oy = cut.y, not cut.open_y
            if _implies(o.y, o.open_y, cut.y, cut.open_y):
                if cx is None or cut.x < cx or (cut.x == cx and not cut.open_x and not ox):
                    cx, ox = cut.x, not cut.open_x
        if cx is None or cy is None:
            return None
        return Bound(cx, cy, ox, oy)

    def is_bounded(self) -> bool:
        return self.empty or self.derived_caps() is not None

    def _integer_box(self, caps: Bound):
        o = self.outer
        return (
            _int_lower(o.x, o.open_x), _int_lower(o.y, o.open_y),
            _int_upper(caps.x, caps.open_x), _int_upper(caps.y, caps.open_y),
        )

    def _integer_cuts(self):
        cut_x = [_int_lower(c.x, c.open_x) for c in self.cuts]
        cut_y = [_int_lower(c.y, c.open_y) for c in self.cuts]
        return cut_x, cut_y

    def lattice_pairings(self, window: Optional[Bound] = None) -> list:
        """Lattice points as integer pairing pairs, sorted.

        ``window`` (closed caps in the oriented frame of the stored region) is
        required for unbounded regions.
        """
        if self.empty:
            return []
        caps = self.derived_caps()
        if window is not None:
            caps = window if caps is None else _tighter(caps, window, lower=False)
        if caps is None:
            raise ValueError("unbounded region: supply a window")
        lo_x, lo_y, hi_x, hi_y = self._integer_box(caps)
        if lo_x > hi_x or lo_y > hi_y:
            return []
        cut_x, cut_y = self._integer_cuts()
        pts = kernels.staircase_points(lo_x, lo_y, hi_x, hi_y, cut_x, cut_y,
                                       self.cqs.n, self.cqs.residue_step)
        if self.orientation == -1:
            pts = [(-x, -y) for x, y in pts]
            pts.sort()
        return pts

    def lattice_points(self, window: Optional[Bound] = None) -> list:
        return [self.cqs.from_pairing(x, y) for x, y in self.lattice_pairings(window)]

    def lattice_count(self) -> int:
        if self.empty:
            return 0
        caps = self.derived_caps()
        if caps is None:
            raise ValueError("unbounded region")
        lo_x, lo_y, hi_x, hi_y = self._integer_box(caps)
        if lo_x > hi_x or lo_y > hi_y:
            return 0
        cut_x, cut_y = self._integer_cuts()
        return kernels.staircase_count(lo_x, lo_y, hi_x, hi_y, cut_x, cut_y,
                                       self.cqs.n, self.cqs.residue_step)

    def rectangles(self) -> list:
        """Decompose a bounded positive region into x-slabs ``(x0, x1, y0, y1)``.

        Open/closed flags are ignored; used for drawing.
        """
        if self.empty:
            return []
        caps = self.derived_caps()
        o = self.outer
        xs = sorted({o.x, caps.x} | {c.x for c in self.cuts if o.x < c.x < caps.x})
        out = []
        for x0, x1 in zip(xs, xs[1:]):
            top = caps.y
            for c in self.cuts:
                if c.x <= x0 and c.y < top:
                    top = c.y
            if top > o.y:
                out.append((x0, x1, o.y, top))
        return out


def _tighter(a: Bound, b: Bound, lower: bool) -> Bound:
    def pick(va, oa, vb, ob):
        if va == vb:
            return va, oa or ob
        if (va > vb) == lower:
            return va, oa
        return vb, ob

    x, ox = pick(a.x, a.open_x, b.x, b.open_x)
    y, oy = pick(a.y, a.open_y, b.y, b.open_y)
    return Bound(x, y, ox, oy)


def _corner(D):
    return Fraction(-D[0]), Fraction(-D[1])


def below_region(cqs: Cqs, D) -> StaircaseRegion:
    """Interior of the section polyhedron minus the open cones at the generators."""
    ax, ay = _corner(D)
    cuts = tuple(Bound(Fraction(x), Fraction(y), True, True) for x, y in mingens_pairing(cqs, D))
    return StaircaseRegion(cqs, Bound(ax, ay, True, True), cuts, name="below")


def below_closure_region(cqs: Cqs, D) -> StaircaseRegion:
    """Topological closure of :func:`below_region`."""
    gens = mingens_pairing(cqs, D)
    if len(gens) < 2:
        return StaircaseRegion.nothing(cqs, "closure(below)")
    ax, ay = _corner(D)
    cuts = tuple(Bound(Fraction(x), Fraction(y), True, True) for x, y in gens)
    caps = Bound(Fraction(gens[-1][0]), Fraction(gens[0][1]))
    return StaircaseRegion(cqs, Bound(ax, ay), cuts, caps, name="closure(below)")


def abelow_region(cqs: Cqs, D) -> StaircaseRegion:
    """Section polyhedron minus the closed cones at the generators."""
    ax, ay = _corner(D)
    cuts = tuple(Bound(Fraction(x), Fraction(y)) for x, y in mingens_pairing(cqs, D))
    return StaircaseRegion(cqs, Bound(ax, ay), cuts, name="abelow")


def abelow_closure_region(cqs: Cqs, D) -> StaircaseRegion:
    # same closed staircase as the closure of below
    return replace(below_closure_region(cqs, D), name="closure(abelow)")


def polyhedron_region(cqs: Cqs, D) -> StaircaseRegion:
    ax, ay = _corner(D)
    return StaircaseRegion(cqs, Bound(ax, ay), name="polyhedron")


def hom_support(cqs: Cqs, D, Dp) -> StaircaseRegion:
    """Degrees ``u`` with ``P(D) + u`` inside ``P(D')``: the cone ``-vertex(D) + P(D')``."""
    return replace(polyhedron_region(cqs, Dp).translate(-vertex(cqs, D)), name="hom")


def canonical_vertex_pairing():
    # vertex(K) has pairings (1, 1)
    return (1, 1)


def link_region(cqs: Cqs, D) -> StaircaseRegion:
    """``below(D)`` intersected with the closure of ``below(D)`` shifted by ``vertex(K)``."""
    kx, ky = canonical_vertex_pairing()
    region = below_region(cqs, D).intersect(below_closure_region(cqs, D).translate_pairing(kx, ky))
    return replace(region, name="link")


def ext_region(cqs: Cqs, D, Dp) -> StaircaseRegion:
    """``-(below(D) - vertex(D'))``."""
    return replace(below_region(cqs, D).translate(-vertex(cqs, Dp)).negate(), name="ext")


def tor_region(cqs: Cqs, D, Dp) -> StaircaseRegion:
    """``abelow(D) + vertex(D')``."""
    return replace(abelow_region(cqs, D).translate(vertex(cqs, Dp)), name="tor")


def lattice_in_box(cqs: Cqs, lo_x, lo_y, hi_x, hi_y) -> list:
    """All lattice points of ``M`` with pairings in the closed integer box."""
    return [
        LatticeVector(*cqs.from_pairing(x, y))
        for x, y in kernels.staircase_points(lo_x, lo_y, hi_x, hi_y, [], [], cqs.n, cqs.residue_step)
    ]
