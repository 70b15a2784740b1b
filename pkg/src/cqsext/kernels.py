"""Kernel dispatch: compiled extension when importable, pure Python otherwise.

Set ``CQSEXT_PURE_PYTHON=1`` to force the fallback.  Inputs too large for
64-bit machine integers are always routed to the fallback, so results stay
exact for arbitrary-precision arguments.
"""

import math
import os

from . import _kernels_py

_compiled = None
if os.environ.get("CQSEXT_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"

_SAFE = 1 << 40
_RANK_SAFE = 1 << 30


def _fits(*values):
    return all(-_SAFE < v < _SAFE for v in values)


def staircase_points(lo_x, lo_y, hi_x, hi_y, cut_x, cut_y, n, step):
    if _compiled is not None and _fits(lo_x, lo_y, hi_x, hi_y, n, *cut_x, *cut_y):
        return _compiled.staircase_points(lo_x, lo_y, hi_x, hi_y, cut_x, cut_y, n, step)
    return _kernels_py.staircase_points(lo_x, lo_y, hi_x, hi_y, cut_x, cut_y, n, step)


def staircase_count(lo_x, lo_y, hi_x, hi_y, cut_x, cut_y, n, step):
    if _compiled is not None and _fits(lo_x, lo_y, hi_x, hi_y, n, *cut_x, *cut_y):
        return _compiled.staircase_count(lo_x, lo_y, hi_x, hi_y, cut_x, cut_y, n, step)
    return _kernels_py.staircase_count(lo_x, lo_y, hi_x, hi_y, cut_x, cut_y, n, step)


def _hadamard_ok(rows):
    bound = 1.0
    for r in rows:
        s = sum(v * v for v in r)
        if s:
            bound *= math.sqrt(s)
            if bound >= _RANK_SAFE:
                return False
    return True


def integer_rank(rows):
    """Rank over Q of an integer matrix (list of rows)."""
    if _compiled is not None and _hadamard_ok(rows):
        return _compiled.integer_rank(rows)
    return _kernels_py.integer_rank(rows)
