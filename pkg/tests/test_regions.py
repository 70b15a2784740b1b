from fractions import Fraction

import pytest
from hypothesis import given

from cqsext.checks import link_identities
from cqsext.divisors import canonical_divisor, class_divisor, in_polyhedron, mingens_pairing
from cqsext.lattice import coprime_pairs, make_cqs
from cqsext.regions import (
    abelow_closure_region,
    abelow_region,
    below_closure_region,
    below_region,
    hom_support,
    lattice_in_box,
    link_region,
    polyhedron_region,
)

from conftest import nq_and_divisor, nq_and_two_divisors

C73 = make_cqs(7, 3)


def brute_below(cqs, D):
    """Lattice points strictly inside P(D) and outside every open generator cone."""
    A, B = -D[0], -D[1]
    gens = mingens_pairing(cqs, D)
    out = []
    for x in range(A - 1, A + cqs.n + 1):
        for y in range(B - 1, B + cqs.n + 1):
            if not cqs.is_lattice_pairing(x, y):
                continue
            if x > A and y > B and not any(x > gx and y > gy for gx, gy in gens):
                out.append(cqs.from_pairing(x, y))
    return sorted(out)


def test_below_e3():
    assert below_region(C73, class_divisor(3)).lattice_points() == [(4, 2)]
    assert below_region(C73, class_divisor(0)).lattice_points() == []


def test_below_e2_is_parallelogram():
    r = below_region(C73, class_divisor(2))
    assert len(r.rectangles()) == 1
    # open along the cone facets, so the vertex itself is not a member
    assert not r.contains((2, Fraction(6, 7)))
    assert r.contains((3, Fraction(10, 7)))


def test_abelow_examples():
    for i in range(7):
        assert abelow_region(C73, class_divisor(i)).lattice_points() == []
    assert abelow_region(C73, class_divisor(2)).contains((2, Fraction(6, 7)))
    assert not abelow_region(C73, class_divisor(0)).contains((0, 0))


def test_link_e3():
    assert link_region(C73, class_divisor(3)).lattice_points() == [(4, 2)]
    assert link_region(C73, class_divisor(0)).lattice_points() == []


def test_hom_support_examples():
    h = hom_support(C73, class_divisor(3), class_divisor(2))
    assert h.outer_apex == (-1, Fraction(-3, 7))
    for i in range(7):
        h = hom_support(C73, class_divisor(i), class_divisor(i))
        assert h.outer_apex == (0, 0) and h.contains((0, 0)) and not h.contains((0, -1))
    h = hom_support(C73, class_divisor(0), canonical_divisor())
    assert h == polyhedron_region(C73, canonical_divisor()).translate((0, 0))


@given(nq_and_divisor())
def test_below_matches_brute_force(data):
    n, q, D = data
    cqs = make_cqs(n, q)
    assert below_region(cqs, D).lattice_points() == brute_below(cqs, D)


@given(nq_and_divisor())
def test_abelow_of_a_divisor_has_no_lattice_points(data):
    n, q, D = data
    assert abelow_region(make_cqs(n, q), D).lattice_points() == []


@given(nq_and_divisor())
def test_closures_contain_regions(data):
    n, q, D = data
    cqs = make_cqs(n, q)
    below, clo = below_region(cqs, D), below_closure_region(cqs, D)
    abelow, aclo = abelow_region(cqs, D), abelow_closure_region(cqs, D)
    A, B = -D[0], -D[1]
    for k in range(0, 2 * n * n + 1):
        x = A + Fraction(k, n)
        for y in (B, B + Fraction(1, 2), B + Fraction(n, 3), B + n - 1):
            if below.contains_pairing(x, y):
                assert clo.contains_pairing(x, y)
            if abelow.contains_pairing(x, y) and len(mingens_pairing(cqs, D)) > 1:
                assert aclo.contains_pairing(x, y)


@given(nq_and_two_divisors())
def test_link_identities_random(data):
    n, q, D, Dp = data
    assert link_identities(make_cqs(n, q), D, Dp) == []


@pytest.mark.parametrize("n,q", coprime_pairs(8))
def test_lattice_in_box(n, q):
    cqs = make_cqs(n, q)
    pts = lattice_in_box(cqs, 0, 0, n, n)
    assert set(cqs.hilbert_basis) <= set(pts)
    assert all(in_polyhedron(cqs, class_divisor(0), u) for u in pts)
