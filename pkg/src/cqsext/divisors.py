"""Torus-invariant Weil divisors ``D = a0*[rho0] + a1*[rho1]``.

The section polyhedron of ``D`` is ``{u : <u, rho_i> >= -a_i}``; in pairing
coordinates it is the quadrant with corner ``(-a0, -a1)``.  Divisor classes are
represented by ``E^i = -i*[rho0]``, and ``E^i[-u]`` denotes the divisor whose
section module is that of ``E^i`` shifted so its support moves by ``+u``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .lattice import Cqs, LatticeVector, RationalVector, pairing


class WeilDivisor(NamedTuple):
    a0: int
    a1: int

    def __add__(self, other):
        return WeilDivisor(self.a0 + other[0], self.a1 + other[1])

    def __sub__(self, other):
        return WeilDivisor(self.a0 - other[0], self.a1 - other[1])

    def __neg__(self):
        return WeilDivisor(-self.a0, -self.a1)

    def __str__(self):
        return f"{self.a0}[rho0]+{self.a1}[rho1]"


class SectionPolyhedron(NamedTuple):
    divisor: WeilDivisor
    vertex: RationalVector


class ShiftedDivisorClass(NamedTuple):
    """The divisor ``E^class_index[-shift]``."""

    class_index: int
    shift: LatticeVector

    def divisor(self, cqs: Cqs) -> WeilDivisor:
        return class_divisor(self.class_index) - principal_divisor(cqs, self.shift)

    def shifted(self, w) -> "ShiftedDivisorClass":
        return ShiftedDivisorClass(self.class_index, LatticeVector(*self.shift) + w)

    def __str__(self):
        return f"E{self.class_index}[-({self.shift.u1},{self.shift.u2})]"


def class_divisor(i: int) -> WeilDivisor:
    """The representative ``E^i = -i*[rho0]``."""
    return WeilDivisor(-i, 0)


def canonical_divisor() -> WeilDivisor:
    return WeilDivisor(-1, -1)


def section_polyhedron(cqs: Cqs, D) -> SectionPolyhedron:
    D = WeilDivisor(*D)
    return SectionPolyhedron(D, RationalVector(*cqs.from_pairing(-D.a0, -D.a1)))


def vertex(cqs: Cqs, D) -> RationalVector:
    return section_polyhedron(cqs, D).vertex


def in_polyhedron(cqs: Cqs, D, u) -> bool:
    """Whether ``u`` lies in the section polyhedron of ``D``."""
    return pairing(u, cqs.rho0) >= -D[0] and pairing(u, cqs.rho1) >= -D[1]


def principal_divisor(cqs: Cqs, u) -> WeilDivisor:
    """``div(chi^u) = <u, rho0>[rho0] + <u, rho1>[rho1]``."""
    return WeilDivisor(pairing(u, cqs.rho0), pairing(u, cqs.rho1))


def mingens_pairing(cqs: Cqs, D) -> tuple:
    """Minimal generators of ``D`` in pairing coordinates, sorted by first pairing."""
    return _mingens_pairing(cqs.n, cqs.q, tuple(cqs.to_pairing(h) for h in cqs.hilbert_basis),
                            -D[0], -D[1])


@lru_cache(maxsize=65536)
def _mingens_pairing(n, q, basis, lo_x, lo_y):
    step = (-q) % n
    out = []
    # generators satisfy lo <= pairing < lo + n in both coordinates
    for x in range(lo_x, lo_x + n):
        y = lo_y + (step * x - lo_y) % n
        if y >= lo_y + n:
            continue
        if all(x - hx < lo_x or y - hy < lo_y for hx, hy in basis):
            out.append((x, y))
    return tuple(out)


def mingens(cqs: Cqs, D) -> list:
    """Minimal homogeneous generators of the section module of ``D``.

    Sorted strictly increasing in ``<u, rho0>`` (hence strictly decreasing in
    ``<u, rho1>``).
    """
    return [cqs.from_pairing(x, y) for x, y in mingens_pairing(cqs, D)]


def class_index(cqs: Cqs, D) -> int:
    """The ``i`` with ``D`` linearly equivalent to ``E^i``.

    From ``[rho0] ~ q[rho1]`` and ``n[rho1] ~ 0``: ``i = -(a0 + q^-1 a1) mod n``.
    """
    qinv = pow(cqs.q, -1, cqs.n)
    return -(D[0] + qinv * D[1]) % cqs.n


def classify(cqs: Cqs, D) -> ShiftedDivisorClass:
    """Write ``D = E^i[-u]``, i.e. ``D + div(chi^u) = E^i``."""
    a0, a1 = D
    i = class_index(cqs, D)
    u1 = -i - a0
    num = cqs.q * u1 - a1
    assert num % cqs.n == 0
    return ShiftedDivisorClass(i, LatticeVector(u1, num // cqs.n))


def parse_divisor(text: str) -> WeilDivisor:
    """Parse ``"a0,a1"``."""
    parts = text.replace("(", "").replace(")", "").split(",")
    if len(parts) != 2:
        raise ValueError(f"divisor must be 'a0,a1', got {text!r}")
    return WeilDivisor(int(parts[0]), int(parts[1]))
