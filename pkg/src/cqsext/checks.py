"""Verification suites for the structural identities, used by ``cqsext check``.

Each suite takes ``(n, q)`` plus options and returns a plain dict::

    {"suite": name, "n": n, "q": q, "passed": bool,
     "checked": [...], "failures": [...]}

Failures carry the offending pair and the degrees on which the two sides
differ.  Results are deterministic for a fixed seed.
"""

from __future__ import annotations

import os
import random
from collections import Counter
from fractions import Fraction

from . import oracle
from .divisors import (
    WeilDivisor,
    canonical_divisor,
    class_divisor,
    in_polyhedron,
    mingens,
    mingens_pairing,
    principal_divisor,
)
from .exttor import (
    clear_caches,
    ext1,
    ext1_direct,
    ext_i,
    matlis_dual,
    tor1,
    tor1_direct,
    tor_i,
)
from .lattice import LatticeVector, coprime_pairs, make_cqs
from .quiver import incoming, quiver_for
from .regions import (
    abelow_closure_region,
    abelow_region,
    below_region,
    link_region,
    tor_region,
    ext_region,
)

SUITES = (
    "symmetry", "duality", "vanishing", "oracle", "link",
    "generators", "periodicity", "shift", "exactness",
)

SCALES = {
    # sweep n-range, random pairs for the link suite, outside samples for the oracle
    "quick": {"max_n": 7, "oracle_max_n": 6, "duality_max_n": 7, "pairs": 50, "outside": 20},
    "full": {"max_n": 12, "oracle_max_n": 8, "duality_max_n": 10, "pairs": 200, "outside": 50},
}


def scale_settings(scale=None) -> dict:
    scale = scale or os.environ.get("CQS_CHECK_SCALE", "quick")
    if scale not in SCALES:
        raise ValueError(f"CQS_CHECK_SCALE must be one of {sorted(SCALES)}, got {scale!r}")
    return dict(SCALES[scale], name=scale)


def _diff(a: Counter, b: Counter, limit=10) -> list:
    delta = (a - b) + (b - a)
    return [[u[0], u[1]] for u in sorted(delta)][:limit]


def _result(name, n, q, checked, failures, **extra) -> dict:
    out = {"suite": name, "n": n, "q": q, "passed": not failures,
           "checked": checked, "failures": failures}
    out.update(extra)
    return out


def check_symmetry(n, q, **_) -> dict:
    """``Ext^1(E^i, K - E^j)`` and ``Ext^1(E^j, K - E^i)`` have equal supports."""
    cqs = make_cqs(n, q)
    K = canonical_divisor()
    checked, failures = [], []
    for i in range(n):
        for j in range(i, n):
            a = ext1(cqs, None, class_divisor(i), K - class_divisor(j)).degrees()
            b = ext1(cqs, None, class_divisor(j), K - class_divisor(i)).degrees()
            checked.append([i, j])
            if a != b:
                failures.append({"pair": [i, j], "degrees": _diff(a, b)})
    return _result("symmetry", n, q, checked, failures)


def check_duality(n, q, max_i=3, **_) -> dict:
    """``Ext^{i+2}(D, K - D')`` is the Matlis dual of ``Tor_i(D, D')``.

    Also reports, without asserting, whether ``Ext^2(D, K - D')`` and
    ``Ext^2(D', K - D)`` agree.
    """
    cqs = make_cqs(n, q)
    K = canonical_divisor()
    checked, failures, informational = [], [], []
    for i in range(1, max_i + 1):
        for a in range(n):
            for b in range(n):
                D, Dp = class_divisor(a), class_divisor(b)
                lhs = ext_i(cqs, None, D, K - Dp, i + 2).degrees()
                rhs = matlis_dual(tor_i(cqs, None, D, Dp, i)).degrees()
                checked.append([a, b, i])
                if lhs != rhs:
                    failures.append({"pair": [a, b], "i": i, "degrees": _diff(lhs, rhs)})
    for a in range(n):
        for b in range(a, n):
            x = ext_i(cqs, None, class_divisor(a), K - class_divisor(b), 2).degrees()
            y = ext_i(cqs, None, class_divisor(b), K - class_divisor(a), 2).degrees()
            if x != y:
                informational.append({"pair": [a, b], "degrees": _diff(x, y)})
    clear_caches()
    return _result("duality", n, q, checked, failures,
                   informational={"ext2_symmetry_disagreements": informational})


def check_vanishing(n, q, max_i=5, **_) -> dict:
    """``Ext^i(D, K) = 0`` for every class and ``1 <= i <= max_i``."""
    cqs = make_cqs(n, q)
    K = canonical_divisor()
    checked, failures = [], []
    for i in range(1, max(max_i, 5) + 1):
        for c in range(n):
            s = ext_i(cqs, None, class_divisor(c), K, i)
            checked.append([c, i])
            if s.dim:
                failures.append({"class": c, "i": i,
                                 "degrees": [[u[0], u[1]] for u in sorted(s.degrees())][:10]})
    return _result("vanishing", n, q, checked, failures)


def _compare_with_oracle(cqs, D, Dp, kind, rng, outside):
    if kind == "ext1":
        support = ext1_direct(cqs, D, Dp)
        ref = (D[0] - Dp[0], D[1] - Dp[1])
        compute = oracle.ext1_oracle
    else:
        support = tor1_direct(cqs, None, D, Dp)
        ref = (-D[0] - Dp[0], -D[1] - Dp[1])
        compute = oracle.tor1_oracle
    expected = support.degrees()
    window = oracle.derived_window(cqs, list(expected), ref)
    degrees = oracle.box_degrees(cqs, *window)
    degrees += oracle.outside_sample(cqs, window, outside, rng)
    got = Counter({u: d for u, d in compute(cqs, D, Dp, degrees).items() if d})
    return expected, got


def check_oracle(n, q, seed=0, outside=50, divisors=None, **_) -> dict:
    """Combinatorial Ext^1/Tor_1 against degreewise ranks on the free presentation."""
    cqs = make_cqs(n, q)
    rng = random.Random(f"{seed}:{n}:{q}")
    pairs = divisors or [(class_divisor(a), class_divisor(b)) for a in range(n) for b in range(n)]
    checked, failures = [], []
    for D, Dp in pairs:
        for kind in ("ext1", "tor1"):
            expected, got = _compare_with_oracle(cqs, D, Dp, kind, rng, outside)
            checked.append([list(D), list(Dp), kind])
            if expected != got:
                failures.append({"pair": [list(D), list(Dp)], "kind": kind,
                                 "degrees": _diff(expected, got)})
    return _result("oracle", n, q, checked, failures)


def random_divisor(rng: random.Random, n: int) -> WeilDivisor:
    return WeilDivisor(rng.randint(-2 * n, 2 * n), rng.randint(-2 * n, 2 * n))


def _vertex_pairing(D):
    return (-D[0], -D[1])


def _rational_grid(region_a, region_b, step=Fraction(1, 2)):
    """Half-integer pairing points covering the bounded parts of two regions."""
    boxes = []
    for r in (region_a, region_b):
        if r.empty:
            continue
        caps = r.derived_caps()
        boxes.append((r.outer.x, r.outer.y, caps.x, caps.y))
    if not boxes:
        return []
    x0 = min(b[0] for b in boxes) - 1
    y0 = min(b[1] for b in boxes) - 1
    x1 = max(b[2] for b in boxes) + 1
    y1 = max(b[3] for b in boxes) + 1
    xs = [x0 + k * step for k in range(int((x1 - x0) / step) + 1)]
    ys = [y0 + k * step for k in range(int((y1 - y0) / step) + 1)]
    return [(x, y) for x in xs for y in ys]


def link_identities(cqs, D, Dp) -> list:
    """Names of the link/Matlis identities that fail for ``(D, D')``."""
    bad = []
    K = canonical_divisor()
    vx, vy = _vertex_pairing(Dp)
    link = link_region(cqs, D)
    below = below_region(cqs, D)
    abelow = abelow_region(cqs, D)

    # (1) point-set identity, checked on a half-integer grid in pairing coordinates
    other = abelow_closure_region(cqs, D).intersect(abelow.translate_pairing(1, 1))
    for x, y in _rational_grid(link, other):
        if link.contains_pairing(x, y) != other.contains_pairing(x, y):
            bad.append("link=closure(abelow)&(abelow+vK)")
            break
    # (2) and (3) at the lattice level
    if below.translate_pairing(vx, vy).lattice_pairings() != link.translate_pairing(vx, vy).lattice_pairings():
        bad.append("below+v(D')=link+v(D')")
    if abelow.translate_pairing(vx, vy).lattice_pairings() != \
            link.translate_pairing(vx - 1, vy - 1).lattice_pairings():
        bad.append("abelow+v(D')=link+v(D')-vK")
    # Matlis dual of the Ext^1 region against K - D' is the Tor region
    neg_ext = sorted((-x, -y) for x, y in ext_region(cqs, D, K - Dp).lattice_pairings())
    if neg_ext != tor_region(cqs, D, Dp).lattice_pairings():
        bad.append("-ext(D,K-D')=tor(D,D')")
    return bad


def check_link(n, q, seed=0, pairs=200, **_) -> dict:
    cqs = make_cqs(n, q)
    rng = random.Random(f"{seed}:{n}:{q}:link")
    checked, failures = [], []
    for _k in range(pairs):
        D, Dp = random_divisor(rng, n), random_divisor(rng, n)
        checked.append([list(D), list(Dp)])
        bad = link_identities(cqs, D, Dp)
        if bad:
            failures.append({"pair": [list(D), list(Dp)], "identities": bad})
    return _result("link", n, q, checked, failures)


def check_generators(n, q, **_) -> dict:
    """``dim Ext^1(D, R) = #mingens(D) - 2`` for every nontrivial class."""
    cqs = make_cqs(n, q)
    checked, failures = [], []
    for c in range(1, n):
        D = class_divisor(c)
        got = ext1(cqs, None, D, class_divisor(0)).dim
        want = len(mingens(cqs, D)) - 2
        checked.append([c, got])
        if got != want:
            failures.append({"class": c, "dim": got, "expected": want})
    return _result("generators", n, q, checked, failures)


def check_periodicity(n, q, max_i=3, **_) -> dict:
    """Gorenstein case ``q = n - 1``: two steps around a 2-cycle shift Ext and Tor."""
    if q != n - 1:
        return _result("periodicity", n, q, [], [], skipped="not Gorenstein")
    cqs = make_cqs(n, q)
    quiver = quiver_for(cqs)
    checked, failures = [], []
    for c in range(1, n):
        (k1,) = quiver.arrow_indices_into(c)
        a1 = quiver.arrows[k1]
        (k2,) = quiver.arrow_indices_into(a1.source)
        a2 = quiver.arrows[k2]
        w = a1.label + a2.label
        for cp in range(n):
            for i in range(1, max_i + 1):
                Dp = class_divisor(cp)
                e0 = ext_i(cqs, quiver, class_divisor(c), Dp, i)
                e2 = ext_i(cqs, quiver, class_divisor(c), Dp, i + 2)
                t0 = tor_i(cqs, quiver, class_divisor(c), Dp, i)
                t2 = tor_i(cqs, quiver, class_divisor(c), Dp, i + 2)
                checked.append([c, cp, i])
                if e2.degrees() != e0.shifted(-w).degrees() or t2.degrees() != t0.shifted(w).degrees():
                    failures.append({"class": c, "other": cp, "i": i})
    return _result("periodicity", n, q, checked, failures)


def check_shift(n, q, seed=0, pairs=50, **_) -> dict:
    """Moving ``D`` by ``w`` moves Ext^1 degrees by ``-w`` and Tor_1 degrees by ``+w``."""
    cqs = make_cqs(n, q)
    quiver = quiver_for(cqs)
    rng = random.Random(f"{seed}:{n}:{q}:shift")
    checked, failures = [], []
    for _k in range(pairs):
        D, Dp = random_divisor(rng, n), random_divisor(rng, n)
        w = LatticeVector(rng.randint(-n, n), rng.randint(-n, n))
        Dw = D - principal_divisor(cqs, w)
        checked.append([list(D), list(Dp), list(w)])
        ok = (
            ext1_direct(cqs, Dw, Dp).degrees() == ext1_direct(cqs, D, Dp).shifted(-w).degrees()
            and tor1_direct(cqs, quiver, Dw, Dp).degrees()
            == tor1_direct(cqs, quiver, D, Dp).shifted(w).degrees()
            and ext1(cqs, quiver, D, Dp).degrees() == ext1_direct(cqs, D, Dp).degrees()
            and tor1(cqs, quiver, D, Dp).degrees() == tor1_direct(cqs, quiver, D, Dp).degrees()
            and _shifted_incoming(cqs, quiver, D, w)
        )
        if not ok:
            failures.append({"pair": [list(D), list(Dp)], "w": list(w)})
    return _result("shift", n, q, checked, failures)


def _shifted_incoming(cqs, quiver, D, w) -> bool:
    Dw = D - principal_divisor(cqs, w)
    moved = [G.shifted(w) for G in incoming(cqs, quiver, D)]
    return incoming(cqs, quiver, Dw) == moved


def exactness_defects(cqs, c) -> list:
    """Degrees where the Euler characteristic of the syzygy sequence of ``E^c`` fails."""
    D = class_divisor(c)
    gens = mingens_pairing(cqs, D)
    summands = [G.divisor(cqs) for G in incoming(cqs, quiver_for(cqs), D)]
    A, B = -D[0], -D[1]
    n = cqs.n
    bad = []
    for u in oracle.box_degrees(cqs, A - n, B - n, A + 2 * n - 1, B + 2 * n - 1):
        x, y = cqs.to_pairing(u)
        lhs = 1 if in_polyhedron(cqs, D, u) else 0
        free = sum(1 for gx, gy in gens if x >= gx and y >= gy)
        syz = sum(1 for G in summands if in_polyhedron(cqs, G, u))
        if lhs != free - syz:
            bad.append([u[0], u[1]])
    return bad


def check_exactness(n, q, **_) -> dict:
    cqs = make_cqs(n, q)
    checked, failures = [], []
    for c in range(n):
        bad = exactness_defects(cqs, c)
        checked.append(c)
        if bad:
            failures.append({"class": c, "degrees": bad[:10]})
    return _result("exactness", n, q, checked, failures)


RUNNERS = {
    "symmetry": check_symmetry,
    "duality": check_duality,
    "vanishing": check_vanishing,
    "oracle": check_oracle,
    "link": check_link,
    "generators": check_generators,
    "periodicity": check_periodicity,
    "shift": check_shift,
    "exactness": check_exactness,
}


def run_task(task) -> dict:
    suite, n, q, options = task
    return RUNNERS[suite](n, q, **options)


def plan(suites, targets, max_i, seed, settings) -> list:
    """Tasks ``(suite, n, q, options)`` for the requested suites and targets.

    ``targets`` is a list of ``(n, q)``; ``None`` means a sweep, in which case
    each suite gets the n-range the scale settings assign to it.
    """
    tasks = []
    for suite in suites:
        if targets is None:
            limit = {"oracle": settings["oracle_max_n"],
                     "duality": settings["duality_max_n"]}.get(suite, settings["max_n"])
            pairs = coprime_pairs(limit)
        else:
            pairs = targets
        for n, q in pairs:
            opts = {"max_i": max_i, "seed": seed}
            if suite == "oracle":
                opts["outside"] = settings["outside"]
            if suite == "link":
                opts["pairs"] = settings["pairs"]
            tasks.append((suite, n, q, opts))
    return tasks


def run(tasks, workers: int = 1) -> list:
    if workers > 1 and len(tasks) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_task, tasks))
    else:
        results = [run_task(t) for t in tasks]
    return sorted(results, key=lambda r: (SUITES.index(r["suite"]), r["n"], r["q"]))
