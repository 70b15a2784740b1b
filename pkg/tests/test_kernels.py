import importlib
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cqsext import _kernels_py, kernels

try:
    from cqsext import _kernels as compiled
except ImportError:
    compiled = None

needs_compiled = pytest.mark.skipif(compiled is None, reason="compiled extension not built")


def fraction_rank(rows):
    m = [[Fraction(v) for v in r] for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(m)) if m[r][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c] != 0:
                f = m[r][c] / m[rank][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


matrices = st.integers(0, 7).flatmap(
    lambda r: st.integers(0, 7).flatmap(
        lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@given(matrices)
def test_rank_matches_fraction_elimination(rows):
    expected = fraction_rank(rows) if rows and rows[0] else 0
    assert _kernels_py.integer_rank(rows) == expected
    assert kernels.integer_rank(rows) == expected


def test_rank_examples():
    assert kernels.integer_rank([]) == 0
    assert kernels.integer_rank([[0, 0], [0, 0]]) == 0
    assert kernels.integer_rank([[1, -1, 0], [0, 1, -1], [1, 0, -1]]) == 2
    big = [[10 ** 30, 1], [1, 1]]
    assert kernels.integer_rank(big) == 2


def brute_points(lo_x, lo_y, hi_x, hi_y, cut_x, cut_y, n, step):
    return [
        (x, y) for x in range(lo_x, hi_x + 1) for y in range(lo_y, hi_y + 1)
        if (y - step * x) % n == 0 and not any(x >= a and y >= b for a, b in zip(cut_x, cut_y))
    ]


staircases = st.tuples(
    st.integers(-20, 20), st.integers(-20, 20), st.integers(0, 25), st.integers(0, 25),
    st.lists(st.tuples(st.integers(-20, 40), st.integers(-20, 40)), max_size=5),
    st.integers(1, 13), st.integers(0, 12),
)


@given(staircases)
def test_staircase_points_brute_force(args):
    lo_x, lo_y, w, h, cuts, n, step = args
    step %= n
    cut_x = [c[0] for c in cuts]
    cut_y = [c[1] for c in cuts]
    call = (lo_x, lo_y, lo_x + w, lo_y + h, cut_x, cut_y, n, step)
    expected = brute_points(*call)
    assert sorted(_kernels_py.staircase_points(*call)) == expected
    assert sorted(kernels.staircase_points(*call)) == expected
    assert kernels.staircase_count(*call) == len(expected)


@needs_compiled
@given(staircases)
def test_backends_agree_on_staircases(args):
    lo_x, lo_y, w, h, cuts, n, step = args
    step %= n
    call = (lo_x, lo_y, lo_x + w, lo_y + h, [c[0] for c in cuts], [c[1] for c in cuts], n, step)
    assert compiled.staircase_points(*call) == _kernels_py.staircase_points(*call)
    assert compiled.staircase_count(*call) == _kernels_py.staircase_count(*call)


@needs_compiled
@given(matrices)
def test_backends_agree_on_rank(rows):
    assert compiled.integer_rank(rows) == _kernels_py.integer_rank(rows)


def test_huge_coordinates_use_fallback():
    big = 10 ** 15
    pts = kernels.staircase_points(big, big, big + 6, big + 6, [], [], 7, 4)
    assert pts == brute_points(big, big, big + 6, big + 6, [], [], 7, 4)


def test_pure_python_switch(monkeypatch):
    monkeypatch.setenv("CQSEXT_PURE_PYTHON", "1")
    try:
        mod = importlib.reload(kernels)
        assert mod.BACKEND == "python"
        assert mod.integer_rank([[1, 2], [2, 4]]) == 1
    finally:
        monkeypatch.delenv("CQSEXT_PURE_PYTHON")
        importlib.reload(kernels)


def test_random_rank_larger():
    rng = random.Random(7)
    for _ in range(50):
        r, c = rng.randint(1, 12), rng.randint(1, 12)
        rows = [[rng.choice([-1, 0, 0, 1, 2]) for _ in range(c)] for _ in range(r)]
        assert kernels.integer_rank(rows) == fraction_rank(rows)
