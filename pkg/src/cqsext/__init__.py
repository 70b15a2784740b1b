"""Multigraded Ext and Tor between Weil divisors on cyclic quotient surface singularities."""

from .divisors import (
    ShiftedDivisorClass,
    WeilDivisor,
    canonical_divisor,
    class_divisor,
    classify,
    mingens,
    vertex,
)
from .exttor import GradedSupport, InvalidIndex, ext1, ext_i, matlis_dual, tor1, tor_i
from .kernels import BACKEND
from .lattice import Cqs, InvalidParameters, LatticeVector, RationalVector, make_cqs
from .quiver import SyzygyQuiver, build_quiver, incoming, quiver_for

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Cqs",
    "GradedSupport",
    "InvalidIndex",
    "InvalidParameters",
    "LatticeVector",
    "RationalVector",
    "ShiftedDivisorClass",
    "SyzygyQuiver",
    "WeilDivisor",
    "build_quiver",
    "canonical_divisor",
    "class_divisor",
    "classify",
    "ext1",
    "ext_i",
    "incoming",
    "make_cqs",
    "matlis_dual",
    "mingens",
    "quiver_for",
    "tor1",
    "tor_i",
    "vertex",
]
