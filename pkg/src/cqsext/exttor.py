"""Ext and Tor between divisorial modules as multigraded supports.

``Ext^1(D, D')`` is supported on ``vertex(D') - below(D)`` and ``Tor_1(D, D')``
on the regions ``abelow(W) + vertex(D')`` for second-level syzygy summands
``W`` of ``D``.  Higher indices follow the quiver: each step replaces ``D`` by
the summands of ``incoming(D)``.

Every computation is reduced to the class representatives ``E^c``: shifting
``D`` by ``w`` moves Ext degrees by ``-w`` and Tor degrees by ``+w``, and
shifting ``D'`` by ``w'`` moves both by ``+w'``.  The memo tables are keyed on
class indices only, so each table holds at most ``n^2`` entries per index.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .divisors import ShiftedDivisorClass, class_divisor, classify
from .lattice import Cqs, LatticeVector, make_cqs
from .quiver import SyzygyQuiver, incoming, quiver_for
from .regions import ext_region, tor_region


class InvalidIndex(ValueError):
    """Raised for a homological index ``i <= 0``."""


@dataclass(frozen=True)
class GradedSupport:
    """A finite multigraded vector space: one basis vector per entry.

    ``entries`` is a tuple of ``(degree, summand_label)`` pairs; the dimension
    in degree ``u`` is the number of entries with that degree.
    """

    entries: tuple = ()

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __len__(self):
        return len(self.entries)

    def __add__(self, other: "GradedSupport") -> "GradedSupport":
        return GradedSupport(self.entries + other.entries)

    def degrees(self) -> Counter:
        return Counter(u for u, _ in self.entries)

    def dimension(self, u) -> int:
        u = tuple(u)
        return sum(1 for v, _ in self.entries if tuple(v) == u)

    def shifted(self, w) -> "GradedSupport":
        w1, w2 = w
        if w1 == 0 and w2 == 0:
            return self
        return GradedSupport(tuple(
            (LatticeVector(u[0] + w1, u[1] + w2), lab) for u, lab in self.entries
        ))

    def prefixed(self, prefix: str) -> "GradedSupport":
        return GradedSupport(tuple((u, prefix + lab) for u, lab in self.entries))

    def same_degrees(self, other: "GradedSupport") -> bool:
        return self.degrees() == other.degrees()

    def sorted_entries(self) -> list:
        return sorted(self.entries, key=lambda e: (tuple(e[0]), e[1]))

    def to_json_dict(self) -> dict:
        grouped: dict = {}
        for u, lab in self.sorted_entries():
            grouped.setdefault(tuple(u), []).append(lab)
        return {
            "dim": self.dim,
            "degrees": [
                {"u": [u[0], u[1]], "mult": len(labs), "labels": labs}
                for u, labs in sorted(grouped.items())
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "GradedSupport":
        entries = []
        for item in data["degrees"]:
            u = LatticeVector(*item["u"])
            entries.extend((u, lab) for lab in item["labels"])
        return cls(tuple(entries))


def matlis_dual(s: GradedSupport) -> GradedSupport:
    """Negate every degree; labels are kept."""
    return GradedSupport(tuple((LatticeVector(-u[0], -u[1]), lab) for u, lab in s.entries))


def _quiver(cqs: Cqs, quiver) -> SyzygyQuiver:
    return quiver if quiver is not None else quiver_for(cqs)


def _normalize(cqs: Cqs, D) -> ShiftedDivisorClass:
    return D if isinstance(D, ShiftedDivisorClass) else classify(cqs, D)


def _divisor(cqs: Cqs, D):
    return D.divisor(cqs) if isinstance(D, ShiftedDivisorClass) else D


# class-level tables; keys are (n, q, class of D, class of D', i)

@lru_cache(maxsize=8192)
def _ext_base(n, q, c, cp, i) -> GradedSupport:
    cqs = make_cqs(n, q)
    if i == 1:
        pts = ext_region(cqs, class_divisor(c), class_divisor(cp)).lattice_points()
        return GradedSupport(tuple((u, "ext1") for u in pts))
    quiver = quiver_for(cqs)
    out = []
    for k in quiver.arrow_indices_into(c):
        a = quiver.arrows[k]
        sub = _ext_base(n, q, a.source, cp, i - 1)
        l1, l2 = a.label
        pre = f"a{k}>"
        out.extend((LatticeVector(u[0] - l1, u[1] - l2), pre + lab) for u, lab in sub.entries)
    return GradedSupport(tuple(out))


@lru_cache(maxsize=8192)
def _tor_base(n, q, c, cp, i) -> GradedSupport:
    cqs = make_cqs(n, q)
    quiver = quiver_for(cqs)
    out = []
    if i == 1:
        Dp = class_divisor(cp)
        for k in quiver.arrow_indices_into(c):
            W = ShiftedDivisorClass(quiver.arrows[k].source, quiver.arrows[k].label)
            for j, Wj in zip(quiver.arrow_indices_into(W.class_index), incoming(cqs, quiver, W)):
                pts = tor_region(cqs, Wj.divisor(cqs), Dp).lattice_points()
                lab = f"a{k}>a{j}>tor1"
                out.extend((u, lab) for u in pts)
        return GradedSupport(tuple(out))
    for k in quiver.arrow_indices_into(c):
        a = quiver.arrows[k]
        sub = _tor_base(n, q, a.source, cp, i - 1)
        l1, l2 = a.label
        pre = f"a{k}>"
        out.extend((LatticeVector(u[0] + l1, u[1] + l2), pre + lab) for u, lab in sub.entries)
    return GradedSupport(tuple(out))


def clear_caches() -> None:
    _ext_base.cache_clear()
    _tor_base.cache_clear()


def ext_i(cqs: Cqs, quiver, D, Dp, i: int) -> GradedSupport:
    """``Ext^i(D, D')`` for ``i >= 1`` (``Ext^0`` is :func:`regions.hom_support`)."""
    if not isinstance(i, int) or i <= 0:
        raise InvalidIndex(f"Ext index must be >= 1, got {i!r}")
    _quiver(cqs, quiver)
    d, dp = _normalize(cqs, D), _normalize(cqs, Dp)
    base = _ext_base(cqs.n, cqs.q, d.class_index, dp.class_index, i)
    return base.shifted(dp.shift - d.shift)


def tor_i(cqs: Cqs, quiver, D, Dp, i: int) -> GradedSupport:
    """``Tor_i(D, D')`` for ``i >= 1``."""
    if not isinstance(i, int) or i <= 0:
        raise InvalidIndex(f"Tor index must be >= 1, got {i!r}")
    _quiver(cqs, quiver)
    d, dp = _normalize(cqs, D), _normalize(cqs, Dp)
    base = _tor_base(cqs.n, cqs.q, d.class_index, dp.class_index, i)
    return base.shifted(dp.shift + d.shift)


def ext1(cqs: Cqs, quiver, D, Dp) -> GradedSupport:
    return ext_i(cqs, quiver, D, Dp, 1)


def tor1(cqs: Cqs, quiver, D, Dp) -> GradedSupport:
    return tor_i(cqs, quiver, D, Dp, 1)


def ext1_direct(cqs: Cqs, D, Dp) -> GradedSupport:
    """``Ext^1`` straight from the region of ``D`` and ``D'``, no class reduction."""
    pts = ext_region(cqs, _divisor(cqs, D), _divisor(cqs, Dp)).lattice_points()
    return GradedSupport(tuple((u, "ext1") for u in pts))


def tor1_direct(cqs: Cqs, quiver, D, Dp) -> GradedSupport:
    """``Tor_1`` from the regions of the second-level syzygy summands of ``D`` itself."""
    quiver = _quiver(cqs, quiver)
    Dp = _divisor(cqs, Dp)
    out = []
    for W in incoming(cqs, quiver, _normalize(cqs, D)):
        for Wj in incoming(cqs, quiver, W):
            out.extend((u, "tor1") for u in tor_region(cqs, Wj.divisor(cqs), Dp).lattice_points())
    return GradedSupport(tuple(out))
