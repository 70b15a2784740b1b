# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=False
"""Compiled hot kernels; same contracts as ``_kernels_py``.

Callers must ensure all integer inputs fit in 62 bits (see ``kernels``).
"""

from libc.stdlib cimport malloc, free


cdef inline long long _pymod(long long a, long long n):
    cdef long long r = a % n
    if r < 0:
        r += n
    return r


def staircase_points(long long lo_x, long long lo_y, long long hi_x, long long hi_y,
                     cut_x, cut_y, long long n, long long step):
    cdef Py_ssize_t ncut = len(cut_x)
    cdef long long *cx = <long long *> malloc((ncut + 1) * sizeof(long long))
    cdef long long *cy = <long long *> malloc((ncut + 1) * sizeof(long long))
    cdef long long x, y, top
    cdef Py_ssize_t k
    out = []
    try:
        for k in range(ncut):
            cx[k] = cut_x[k]
            cy[k] = cut_y[k]
        x = lo_x
        while x <= hi_x:
            top = hi_y
            for k in range(ncut):
                if cx[k] <= x and cy[k] - 1 < top:
                    top = cy[k] - 1
            y = lo_y + _pymod(_pymod(step * _pymod(x, n), n) - _pymod(lo_y, n), n)
            while y <= top:
                out.append((x, y))
                y += n
            x += 1
    finally:
        free(cx)
        free(cy)
    return out


def staircase_count(long long lo_x, long long lo_y, long long hi_x, long long hi_y,
                    cut_x, cut_y, long long n, long long step):
    cdef Py_ssize_t ncut = len(cut_x)
    cdef long long *cx = <long long *> malloc((ncut + 1) * sizeof(long long))
    cdef long long *cy = <long long *> malloc((ncut + 1) * sizeof(long long))
    cdef long long x, y, top, total = 0
    cdef Py_ssize_t k
    try:
        for k in range(ncut):
            cx[k] = cut_x[k]
            cy[k] = cut_y[k]
        x = lo_x
        while x <= hi_x:
            top = hi_y
            for k in range(ncut):
                if cx[k] <= x and cy[k] - 1 < top:
                    top = cy[k] - 1
            y = lo_y + _pymod(_pymod(step * _pymod(x, n), n) - _pymod(lo_y, n), n)
            if y <= top:
                total += (top - y) // n + 1
            x += 1
    finally:
        free(cx)
        free(cy)
    return total


def integer_rank(rows):
    """Bareiss rank; entries and all minors must fit in 31 bits."""
    cdef Py_ssize_t nrows = 0, ncols, r, c, col, pivot, rank = 0
    cdef long long p, a, prev = 1
    cdef long long *m
    cdef long long *tmp
    kept = [r_ for r_ in rows if any(r_)]
    nrows = len(kept)
    if nrows == 0:
        return 0
    ncols = len(kept[0])
    m = <long long *> malloc(nrows * ncols * sizeof(long long))
    tmp = <long long *> malloc(ncols * sizeof(long long))
    try:
        for r in range(nrows):
            row = kept[r]
            for c in range(ncols):
                m[r * ncols + c] = row[c]
        for col in range(ncols):
            if rank == nrows:
                break
            pivot = -1
            for r in range(rank, nrows):
                if m[r * ncols + col] != 0:
                    pivot = r
                    break
            if pivot < 0:
                continue
            if pivot != rank:
                for c in range(ncols):
                    tmp[c] = m[rank * ncols + c]
                    m[rank * ncols + c] = m[pivot * ncols + c]
                    m[pivot * ncols + c] = tmp[c]
            p = m[rank * ncols + col]
            for r in range(rank + 1, nrows):
                a = m[r * ncols + col]
                for c in range(col + 1, ncols):
                    m[r * ncols + c] = (p * m[r * ncols + c] - a * m[rank * ncols + c]) // prev
                m[r * ncols + col] = 0
            prev = p
            rank += 1
    finally:
        free(m)
        free(tmp)
    return rank
