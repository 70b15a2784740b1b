"""Degreewise linear-algebra computation of Ext^1 and Tor_1.

Builds the two-step free presentation

    F2 --d2--> F1 --d1--> F0 --> D --> 0

directly from consecutive-generator intersections, then computes, in every
requested degree, cohomology of ``Hom(F., D')`` and homology of ``F. (x) D'``
with exact integer ranks.  Nothing here looks at below/abelow regions or the
quiver; only minimal generators and raw membership in section polyhedra.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import kernels
from .divisors import WeilDivisor, mingens_pairing
from .lattice import Cqs, LatticeVector


@dataclass(frozen=True)
class GradedFreeModule:
    """``F = sum_k R[-shift_k]``; shifts stored in pairing coordinates."""

    shifts: tuple

    def rank(self) -> int:
        return len(self.shifts)

    def dim(self, u) -> int:
        x, y = u
        return sum(1 for a, b in self.shifts if x >= a and y >= b)

    def lattice_shifts(self, cqs: Cqs) -> list:
        return [cqs.from_pairing(a, b) for a, b in self.shifts]


@dataclass(frozen=True)
class MonomialMatrix:
    """Sparse map of free modules; ``entries[(row, col)] = (coef, exponent)``.

    Column ``col`` is a basis element of the source, row ``row`` one of the
    target, and ``exponent = source_shift - target_shift`` (pairing coordinates).
    """

    nrows: int
    ncols: int
    entries: dict = field(default_factory=dict)

    def scalar(self, rows, cols) -> list:
        ri = {r: i for i, r in enumerate(rows)}
        ci = {c: j for j, c in enumerate(cols)}
        out = [[0] * len(cols) for _ in rows]
        for (r, c), (coef, _) in self.entries.items():
            if r in ri and c in ci:
                out[ri[r]][ci[c]] = coef
        return out


@dataclass(frozen=True)
class Presentation:
    F0: GradedFreeModule
    F1: GradedFreeModule
    F2: GradedFreeModule
    d1: MonomialMatrix
    d2: MonomialMatrix


def _syzygy_map(cqs, gens, offset_rows=0):
    """Generators of each consecutive intersection and the map into ``R^gens``.

    Returns ``(blocks, entries)``: ``blocks[k]`` lists the generators of the
    k-th intersection; ``entries`` maps (row, col) with cols numbered across
    blocks.
    """
    blocks = []
    entries = {}
    col = 0
    for k in range(1, len(gens)):
        (_, y_prev), (x_cur, _) = gens[k - 1], gens[k]
        W = WeilDivisor(-x_cur, -y_prev)
        block = []
        blocks.append((W, block))
        for h in mingens_pairing(cqs, W):
            block.append(h)
            gk, gp = gens[k], gens[k - 1]
            entries[(offset_rows + k, col)] = (1, (h[0] - gk[0], h[1] - gk[1]))
            entries[(offset_rows + k - 1, col)] = (-1, (h[0] - gp[0], h[1] - gp[1]))
            col += 1
    return blocks, entries, col


def presentation(cqs: Cqs, D) -> Presentation:
    """Free modules ``F0, F1, F2`` and maps ``d1, d2`` for the divisor ``D``."""
    gens = mingens_pairing(cqs, D)
    blocks1, e1, n1 = _syzygy_map(cqs, gens)
    F1_shifts = [h for _, block in blocks1 for h in block]

    e2 = {}
    F2_shifts = []
    row_offset = 0
    col_offset = 0
    for _, block in blocks1:
        blocks2, e, n2 = _syzygy_map(cqs, block, row_offset)
        for (r, c), v in e.items():
            e2[(r, c + col_offset)] = v
        F2_shifts.extend(h for _, b in blocks2 for h in b)
        row_offset += len(block)
        col_offset += n2
    return Presentation(
        GradedFreeModule(tuple(gens)),
        GradedFreeModule(tuple(F1_shifts)),
        GradedFreeModule(tuple(F2_shifts)),
        MonomialMatrix(len(gens), n1, e1),
        MonomialMatrix(len(F1_shifts), col_offset, e2),
    )


def composition_vanishes(pres: Presentation, u) -> bool:
    """``d1 . d2 = 0`` in degree ``u`` (pairing coordinates), as scalar matrices."""
    act0 = _active_free(pres.F0, u)
    act1 = _active_free(pres.F1, u)
    act2 = _active_free(pres.F2, u)
    m1 = pres.d1.scalar(act0, act1)
    m2 = pres.d2.scalar(act1, act2)
    for i in range(len(act0)):
        for j in range(len(act2)):
            if sum(m1[i][k] * m2[k][j] for k in range(len(act1))):
                return False
    return True


def composition_vanishes_monomial(pres: Presentation) -> bool:
    """``d1 . d2 = 0`` as a product of monomial matrices (exponents compared)."""
    by_row = {}
    for (r, c), (coef, ex) in pres.d2.entries.items():
        by_row.setdefault(r, []).append((c, coef, ex))
    acc = {}
    for (r0, r1), (coef1, ex1) in pres.d1.entries.items():
        for c2, coef2, ex2 in by_row.get(r1, ()):
            key = (r0, c2, ex1[0] + ex2[0], ex1[1] + ex2[1])
            acc[key] = acc.get(key, 0) + coef1 * coef2
    return all(v == 0 for v in acc.values())


def _active_free(F: GradedFreeModule, u):
    x, y = u
    return [k for k, (a, b) in enumerate(F.shifts) if x >= a and y >= b]


def _active_tensor(F: GradedFreeModule, u, corner):
    # (R[-a] (x) D')_u = D'_{u-a}
    x, y = u
    cx, cy = corner
    return [k for k, (a, b) in enumerate(F.shifts) if x - a >= cx and y - b >= cy]


def _active_hom(F: GradedFreeModule, u, corner):
    # Hom(R[-a], D')_u = D'_{u+a}
    x, y = u
    cx, cy = corner
    return [k for k, (a, b) in enumerate(F.shifts) if x + a >= cx and y + b >= cy]


def _middle_homology(pres: Presentation, act0, act1, act2) -> int:
    if not act1:
        return 0
    r1 = kernels.integer_rank(pres.d1.scalar(act0, act1)) if act0 else 0
    r2 = kernels.integer_rank(pres.d2.scalar(act1, act2)) if act2 else 0
    return len(act1) - r1 - r2


def _pairing_degrees(cqs: Cqs, degrees):
    return [cqs.to_pairing(u) for u in degrees]


def ext1_oracle(cqs: Cqs, D, Dp, degrees) -> dict:
    """``dim Ext^1(D, D')_u`` for every lattice degree ``u`` in ``degrees``.

    Cohomology at ``Hom(F1, D')`` of ``Hom(F0, D') -> Hom(F1, D') -> Hom(F2, D')``.
    """
    pres = presentation(cqs, D)
    corner = (-Dp[0], -Dp[1])
    out = {}
    for u, p in zip(degrees, _pairing_degrees(cqs, degrees)):
        out[LatticeVector(*u)] = _middle_homology(
            pres,
            _active_hom(pres.F0, p, corner),
            _active_hom(pres.F1, p, corner),
            _active_hom(pres.F2, p, corner),
        )
    return out


def tor1_oracle(cqs: Cqs, D, Dp, degrees) -> dict:
    """``dim Tor_1(D, D')_u`` as homology of ``F2 (x) D' -> F1 (x) D' -> F0 (x) D'``."""
    pres = presentation(cqs, D)
    corner = (-Dp[0], -Dp[1])
    out = {}
    for u, p in zip(degrees, _pairing_degrees(cqs, degrees)):
        out[LatticeVector(*u)] = _middle_homology(
            pres,
            _active_tensor(pres.F0, p, corner),
            _active_tensor(pres.F1, p, corner),
            _active_tensor(pres.F2, p, corner),
        )
    return out


def hom_rank_defect(cqs: Cqs, D, Dp, u) -> tuple:
    """``(dim Hom(F0, D')_u, rank of Hom(F0, D')_u -> Hom(F1, D')_u)``."""
    pres = presentation(cqs, D)
    p = cqs.to_pairing(u)
    corner = (-Dp[0], -Dp[1])
    act0 = _active_hom(pres.F0, p, corner)
    act1 = _active_hom(pres.F1, p, corner)
    r = kernels.integer_rank(pres.d1.scalar(act0, act1)) if act0 and act1 else 0
    return len(act0), r


def box_degrees(cqs: Cqs, lo_x, lo_y, hi_x, hi_y) -> list:
    """Lattice degrees with pairings in a closed integer box."""
    out = []
    n, q = cqs.n, cqs.q
    for x in range(lo_x, hi_x + 1):
        for y in range(lo_y, hi_y + 1):
            if (y + q * x) % n == 0:
                out.append(LatticeVector(x, (y + q * x) // n))
    return out


def derived_window(cqs: Cqs, support_degrees, reference, margin=None) -> tuple:
    """Pairing box around a support and a reference degree, widened by ``margin`` (default ``n``)."""
    margin = cqs.n if margin is None else margin
    pts = [cqs.to_pairing(u) for u in support_degrees] + [tuple(reference)]
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    return (min(xs) - margin, min(ys) - margin, max(xs) + margin, max(ys) + margin)


def outside_sample(cqs: Cqs, window, count, rng: random.Random, spread=None) -> list:
    """``count`` random lattice degrees outside ``window`` within a wider box."""
    spread = 5 * cqs.n if spread is None else spread
    lo_x, lo_y, hi_x, hi_y = window
    out = []
    while len(out) < count:
        x = rng.randint(lo_x - spread, hi_x + spread)
        y = rng.randint(lo_y - spread, hi_y + spread)
        y -= (y + cqs.q * x) % cqs.n
        if lo_x <= x <= hi_x and lo_y <= y <= hi_y:
            continue
        out.append(LatticeVector(x, (y + cqs.q * x) // cqs.n))
    return out
