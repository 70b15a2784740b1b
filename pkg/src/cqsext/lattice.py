"""Lattice and cone arithmetic for a two-dimensional cyclic quotient singularity.

The singularity with parameters ``0 < q < n``, ``gcd(q, n) = 1`` is the affine
toric surface of the cone spanned by ``rho0 = (1, 0)`` and ``rho1 = (-q, n)``.
Degrees live in ``M = Z^2``; the pairing is the ordinary dot product.

Most of the package works in *pairing coordinates*: a point ``u`` of ``M_Q`` is
represented by ``(<u, rho0>, <u, rho1>)``.  The map is a linear isomorphism of
``Q^2`` whose image of ``M`` is the set of integer pairs ``(x, y)`` with
``y = -q*x (mod n)``.  Vertices of section polyhedra become integer pairs
there, which is what keeps every region computation exact and integral.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import NamedTuple, Union


class InvalidParameters(ValueError):
    """Raised for ``(n, q)`` outside ``0 < q < n`` with ``gcd(q, n) = 1``."""


class LatticeVector(NamedTuple):
    u1: int
    u2: int

    def __add__(self, other):
        return LatticeVector(self.u1 + other[0], self.u2 + other[1])

    def __sub__(self, other):
        return LatticeVector(self.u1 - other[0], self.u2 - other[1])

    def __neg__(self):
        return LatticeVector(-self.u1, -self.u2)

    def __repr__(self):
        return f"({self.u1},{self.u2})"


class RationalVector(NamedTuple):
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x, y) -> "RationalVector":
        return cls(Fraction(x), Fraction(y))

    def __add__(self, other):
        return RationalVector(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return RationalVector(self.x - other[0], self.y - other[1])

    def __neg__(self):
        return RationalVector(-self.x, -self.y)

    def is_integral(self) -> bool:
        return Fraction(self.x).denominator == 1 and Fraction(self.y).denominator == 1

    def __repr__(self):
        return f"({self.x},{self.y})"


Vector = Union[LatticeVector, RationalVector, tuple]

RHO0 = "rho0"
RHO1 = "rho1"


@dataclass(frozen=True)
class Cqs:
    """The singularity datum ``(n, q)`` with its rays and dual-cone Hilbert basis."""

    n: int
    q: int
    hilbert_basis: tuple = field(default=(), compare=False)

    @property
    def rho0(self) -> LatticeVector:
        return LatticeVector(1, 0)

    @property
    def rho1(self) -> LatticeVector:
        return LatticeVector(-self.q, self.n)

    def ray(self, which) -> LatticeVector:
        if which in (RHO0, 0):
            return self.rho0
        if which in (RHO1, 1):
            return self.rho1
        raise ValueError(f"unknown ray {which!r}")

    def to_pairing(self, u: Vector) -> tuple:
        """``u`` in pairing coordinates ``(<u, rho0>, <u, rho1>)``."""
        return (u[0], -self.q * u[0] + self.n * u[1])

    def from_pairing(self, x, y) -> Vector:
        """Inverse of :meth:`to_pairing`; a LatticeVector when the result is integral."""
        num = y + self.q * x
        if isinstance(x, int) and isinstance(num, int) and num % self.n == 0:
            return LatticeVector(x, num // self.n)
        return RationalVector(Fraction(x), Fraction(num, self.n))

    def is_lattice_pairing(self, x, y) -> bool:
        """True iff the pairing pair ``(x, y)`` comes from a point of ``M``."""
        x = Fraction(x)
        y = Fraction(y)
        if x.denominator != 1 or y.denominator != 1:
            return False
        return (int(y) + self.q * int(x)) % self.n == 0

    @property
    def residue_step(self) -> int:
        """``-q mod n``: lattice points satisfy ``y = residue_step * x (mod n)``."""
        return (-self.q) % self.n


def validate_parameters(n: int, q: int) -> None:
    if not (isinstance(n, int) and isinstance(q, int)):
        raise InvalidParameters(f"n and q must be integers, got {n!r}, {q!r}")
    if not 0 < q < n:
        raise InvalidParameters(f"need 0 < q < n, got n={n}, q={q}")
    if gcd(q, n) != 1:
        raise InvalidParameters(f"need gcd(q, n) = 1, got gcd({q}, {n}) = {gcd(q, n)}")


def pairing(u: Vector, ray: Vector) -> Union[int, Fraction]:
    """Scalar product ``<u, ray>``; exact for integer and rational entries."""
    return u[0] * ray[0] + u[1] * ray[1]


def dual_cone_contains(cqs: Cqs, u: Vector, strict: bool = False) -> bool:
    """Membership of ``u`` in the dual cone (its interior when ``strict``)."""
    a = pairing(u, cqs.rho0)
    b = pairing(u, cqs.rho1)
    if strict:
        return a > 0 and b > 0
    return a >= 0 and b >= 0


def compute_hilbert_basis(n: int, q: int) -> Cqs:
    """Build the :class:`Cqs` for ``(n, q)`` including its Hilbert basis.

    Candidates are the nonzero lattice points with both pairings in ``[0, n]``;
    anything outside reduces by ``(0, 1)`` or ``(n, q)``.  A candidate is kept
    when no other nonzero lattice point of the cone lies below it in both
    pairings, which is exactly irreducibility.
    """
    validate_parameters(n, q)
    step = (-q) % n
    points = [
        (x, y)
        for x in range(n + 1)
        for y in range(n + 1)
        if (y - step * x) % n == 0 and (x, y) != (0, 0)
    ]
    basis = []
    for x, y in points:
        reducible = any(
            (a, b) != (x, y) and a <= x and b <= y for a, b in points
        )
        if not reducible:
            basis.append((x, y))
    basis.sort()
    vectors = tuple(LatticeVector(x, (y + q * x) // n) for x, y in basis)
    return Cqs(n, q, vectors)


def hilbert_basis_pairings(cqs: Cqs) -> tuple:
    return tuple(cqs.to_pairing(h) for h in cqs.hilbert_basis)


def make_cqs(n: int, q: int) -> Cqs:
    """Alias of :func:`compute_hilbert_basis`, cached on ``(n, q)``."""
    key = (n, q)
    cached = _CQS_CACHE.get(key)
    if cached is None:
        cached = _CQS_CACHE[key] = compute_hilbert_basis(n, q)
    return cached


_CQS_CACHE: dict = {}


def coprime_pairs(max_n: int, min_n: int = 2):
    """All valid ``(n, q)`` with ``min_n <= n <= max_n``."""
    return [(n, q) for n in range(min_n, max_n + 1) for q in range(1, n) if gcd(q, n) == 1]
