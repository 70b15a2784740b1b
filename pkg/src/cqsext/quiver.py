"""First syzygies of divisorial modules and the labelled syzygy quiver.

For consecutive minimal generators ``u^{i-1}, u^i`` of ``D`` the intersection
``(u^{i-1} + cone) & (u^i + cone)`` is again a section polyhedron; its divisor
takes the larger facet value from each generator.  The quiver records, for each
class ``E^i``, one arrow per such summand, labelled by the summand's shift.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import NamedTuple

from .divisors import (
    ShiftedDivisorClass,
    WeilDivisor,
    class_divisor,
    classify,
    mingens_pairing,
)
from .lattice import Cqs, LatticeVector


class LabelledArrow(NamedTuple):
    source: int
    target: int
    label: LatticeVector


def syzygy_summands(cqs: Cqs, D) -> list:
    """Classes of the divisorial summands of the first syzygy module of ``D``."""
    gens = mingens_pairing(cqs, D)
    out = []
    for (_, y_prev), (x_cur, _) in zip(gens, gens[1:]):
        out.append(classify(cqs, WeilDivisor(-x_cur, -y_prev)))
    return out


@dataclass(frozen=True)
class SyzygyQuiver:
    cqs: Cqs
    arrows: tuple

    @property
    def vertices(self) -> range:
        return range(self.cqs.n)

    def arrows_into(self, i: int) -> list:
        return [a for a in self.arrows if a.target == i]

    def arrow_indices_into(self, i: int) -> tuple:
        return self._into[i]

    def __post_init__(self):
        into = [[] for _ in range(self.cqs.n)]
        for k, a in enumerate(self.arrows):
            into[a.target].append(k)
        object.__setattr__(self, "_into", tuple(tuple(x) for x in into))

    def sorted_arrows(self) -> list:
        return sorted(self.arrows, key=lambda a: (a.target, a.source, tuple(a.label)))

    def to_json_dict(self) -> dict:
        return {
            "n": self.cqs.n,
            "q": self.cqs.q,
            "arrows": [
                {"source": a.source, "target": a.target, "label": [a.label.u1, a.label.u2]}
                for a in self.sorted_arrows()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"

    def to_dot(self) -> str:
        lines = [f'digraph "Q_{self.cqs.n}_{self.cqs.q}" {{']
        for i in self.vertices:
            lines.append(f'  E{i} [label="E{i}"];')
        for a in self.sorted_arrows():
            lines.append(f'  E{a.source} -> E{a.target} [label="[{a.label.u1},{a.label.u2}]"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_quiver(cqs: Cqs) -> SyzygyQuiver:
    arrows = []
    for i in range(cqs.n):
        for summand in syzygy_summands(cqs, class_divisor(i)):
            arrows.append(LabelledArrow(summand.class_index, i, summand.shift))
    return SyzygyQuiver(cqs, tuple(arrows))


_QUIVER_CACHE: dict = {}


def quiver_for(cqs: Cqs) -> SyzygyQuiver:
    key = (cqs.n, cqs.q)
    Q = _QUIVER_CACHE.get(key)
    if Q is None:
        Q = _QUIVER_CACHE[key] = build_quiver(cqs)
    return Q


def incoming(cqs: Cqs, quiver: SyzygyQuiver, D) -> list:
    """``incoming(D)`` read off the quiver; parallel arrows give separate entries."""
    cls = D if isinstance(D, ShiftedDivisorClass) else classify(cqs, D)
    return [
        ShiftedDivisorClass(quiver.arrows[k].source, quiver.arrows[k].label + cls.shift)
        for k in quiver.arrow_indices_into(cls.class_index)
    ]
