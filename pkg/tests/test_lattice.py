from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cqsext.lattice import (
    InvalidParameters,
    LatticeVector,
    RationalVector,
    compute_hilbert_basis,
    coprime_pairs,
    dual_cone_contains,
    make_cqs,
    pairing,
)

from conftest import nq

C73 = make_cqs(7, 3)


def test_pairing_examples():
    assert pairing((7, 3), C73.rho1) == 0
    assert pairing((0, 1), C73.rho0) == 0
    assert pairing((4, 2), C73.rho1) == 2


def test_pairing_rational():
    assert pairing(RationalVector(Fraction(3), Fraction(9, 7)), C73.rho1) == 0


def test_dual_cone_contains():
    assert dual_cone_contains(C73, (1, 1), strict=True)
    assert dual_cone_contains(C73, (0, 0))
    assert not dual_cone_contains(C73, (0, 0), strict=True)
    assert not dual_cone_contains(C73, (7, 3), strict=True)
    assert dual_cone_contains(C73, (7, 3))
    assert not dual_cone_contains(C73, (1, 0))


def test_hilbert_basis_73():
    assert set(compute_hilbert_basis(7, 3).hilbert_basis) == {(0, 1), (1, 1), (2, 1), (7, 3)}


def test_hilbert_basis_21():
    assert set(compute_hilbert_basis(2, 1).hilbert_basis) == {(0, 1), (1, 1), (2, 1)}


@pytest.mark.parametrize("n,q", [(4, 2), (6, 3), (3, 0), (3, 3), (5, 7), (1, 0), (5, -1)])
def test_invalid_parameters(n, q):
    with pytest.raises(InvalidParameters):
        compute_hilbert_basis(n, q)


def test_pairing_roundtrip_and_vectors():
    u = LatticeVector(4, 2)
    assert C73.to_pairing(u) == (4, 2)
    assert C73.from_pairing(4, 2) == u
    assert isinstance(C73.from_pairing(1, 1), RationalVector)
    assert C73.from_pairing(1, 1) == (1, Fraction(4, 7))
    assert u + (1, 1) == (5, 3) and u - (1, 1) == (3, 1) and -u == (-4, -2)
    assert repr(u) == "(4,2)"


def test_coprime_pairs():
    assert coprime_pairs(4) == [(2, 1), (3, 1), (3, 2), (4, 1), (4, 3)]


@given(nq(), st.tuples(st.integers(-50, 50), st.integers(-50, 50)),
       st.tuples(st.integers(-50, 50), st.integers(-50, 50)))
def test_pairing_linear(p, u, v):
    cqs = make_cqs(*p)
    s = (u[0] + v[0], u[1] + v[1])
    for r in (cqs.rho0, cqs.rho1):
        assert pairing(s, r) == pairing(u, r) + pairing(v, r)


def _cone_points(cqs, bound):
    return [
        (a, b) for a in range(bound + 1) for b in range(-bound, bound + 1)
        if dual_cone_contains(cqs, (a, b)) and cqs.to_pairing((a, b))[1] <= bound
    ]


@pytest.mark.parametrize("n,q", coprime_pairs(9))
def test_hilbert_basis_irreducible(n, q):
    cqs = make_cqs(n, q)
    pts = set(_cone_points(cqs, 2 * n))
    for h in cqs.hilbert_basis:
        for v in pts:
            w = (h[0] - v[0], h[1] - v[1])
            if w in pts:
                assert v == (0, 0) or w == (0, 0)


@pytest.mark.parametrize("n,q", coprime_pairs(9))
def test_hilbert_basis_generates(n, q):
    cqs = make_cqs(n, q)
    pts = sorted(_cone_points(cqs, 2 * n), key=lambda u: cqs.to_pairing(u))
    reachable = {(0, 0)}
    for u in pts:
        if u == (0, 0):
            continue
        assert any((u[0] - h[0], u[1] - h[1]) in reachable for h in cqs.hilbert_basis), u
        reachable.add(u)


def test_basis_contains_boundary_generators():
    for n, q in coprime_pairs(12):
        hb = make_cqs(n, q).hilbert_basis
        assert (0, 1) in hb and (n, q) in hb
