import random
from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cqsext import oracle
from cqsext.checks import check_oracle
from cqsext.divisors import canonical_divisor, class_divisor, mingens
from cqsext.exttor import ext1, tor1
from cqsext.lattice import LatticeVector, make_cqs
from cqsext.regions import hom_support

from conftest import nq_and_divisor, nq_and_two_divisors

C73 = make_cqs(7, 3)
E = class_divisor


def test_presentation_e3():
    pres = oracle.presentation(C73, E(3))
    assert pres.F0.lattice_shifts(C73) == [(3, 2), (4, 2), (7, 3)]
    expected = [g + (3, 2) for g in mingens(C73, E(1))] + [g + (4, 2) for g in mingens(C73, E(3))]
    assert Counter(pres.F1.lattice_shifts(C73)) == Counter(expected)


def test_presentation_free():
    pres = oracle.presentation(C73, E(0))
    assert pres.F0.rank() == 1 and pres.F1.rank() == 0 and pres.F2.rank() == 0


def test_ext1_oracle_e3_e0():
    degrees = [LatticeVector(a, b) for a in range(-10, 1) for b in range(-10, 1)]
    got = {u: d for u, d in oracle.ext1_oracle(C73, E(3), E(0), degrees).items() if d}
    assert got == {(-4, -2): 1}


def test_oracle_zero_cases():
    degrees = oracle.box_degrees(C73, -15, -15, 15, 15)
    assert not any(oracle.ext1_oracle(C73, E(0), E(3), degrees).values())
    assert not any(oracle.tor1_oracle(C73, E(0), E(3), degrees).values())
    assert not any(oracle.tor1_oracle(C73, E(3), E(0), degrees).values())
    for j in range(7):
        assert not any(oracle.ext1_oracle(C73, E(j), canonical_divisor(), degrees).values())


def test_tor1_oracle_e3_e2():
    expected = tor1(C73, None, E(3), E(2)).degrees()
    window = oracle.derived_window(C73, list(expected), (-3 + 2, 0))
    got = oracle.tor1_oracle(C73, E(3), E(2), oracle.box_degrees(C73, *window))
    assert Counter({u: d for u, d in got.items() if d}) == expected


@given(nq_and_divisor(max_n=10, spread=2))
def test_composition_vanishes(data):
    n, q, D = data
    cqs = make_cqs(n, q)
    pres = oracle.presentation(cqs, D)
    assert oracle.composition_vanishes_monomial(pres)
    A, B = -D[0], -D[1]
    for x in range(A, A + 2 * n, 2):
        for y in range(B, B + 2 * n, 3):
            assert oracle.composition_vanishes(pres, (x, y))


@given(nq_and_two_divisors(max_n=8), st.data())
def test_hom_exactness(data, draw):
    n, q, D, Dp = data
    cqs = make_cqs(n, q)
    hom = hom_support(cqs, D, Dp)
    rng = random.Random(draw.draw(st.integers(0, 10 ** 6)))
    A, B = D[0] - Dp[0], D[1] - Dp[1]
    for _ in range(15):
        x = rng.randint(A - n, A + 2 * n)
        y = rng.randint(B - n, B + 2 * n)
        y -= (y + q * x) % n
        u = cqs.from_pairing(x, y)
        dim0, rank = oracle.hom_rank_defect(cqs, D, Dp, u)
        assert rank + (1 if hom.contains(u) else 0) == dim0


@given(nq_and_two_divisors(max_n=8))
def test_oracle_agrees_on_arbitrary_divisors(data):
    n, q, D, Dp = data
    r = check_oracle(n, q, seed=1, outside=10, divisors=[(D, Dp)])
    assert r["passed"], r["failures"]


@pytest.mark.parametrize("n,q", [(5, 2), (7, 3), (8, 3), (6, 5)])
def test_oracle_agrees_on_classes(n, q):
    assert check_oracle(n, q, seed=0, outside=20)["passed"]


def test_outside_sample_is_outside():
    rng = random.Random(3)
    window = (0, 0, 10, 10)
    for u in oracle.outside_sample(C73, window, 50, rng):
        x, y = C73.to_pairing(u)
        assert not (0 <= x <= 10 and 0 <= y <= 10)
