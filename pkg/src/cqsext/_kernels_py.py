"""Pure-Python hot kernels.  Reference semantics for the Cython versions."""


def staircase_points(lo_x, lo_y, hi_x, hi_y, cut_x, cut_y, n, step):
    """Integer points ``(x, y)`` of a closed staircase in pairing coordinates.

    Keeps ``lo_x <= x <= hi_x``, ``lo_y <= y <= hi_y``, ``y = step*x (mod n)``,
    and drops every point with ``x >= cut_x[k] and y >= cut_y[k]`` for some k.
    """
    out = []
    ncut = len(cut_x)
    for x in range(lo_x, hi_x + 1):
        top = hi_y
        for k in range(ncut):
            if cut_x[k] <= x and cut_y[k] - 1 < top:
                top = cut_y[k] - 1
        y = lo_y + (step * x - lo_y) % n
        while y <= top:
            out.append((x, y))
            y += n
    return out


def staircase_count(lo_x, lo_y, hi_x, hi_y, cut_x, cut_y, n, step):
    total = 0
    ncut = len(cut_x)
    for x in range(lo_x, hi_x + 1):
        top = hi_y
        for k in range(ncut):
            if cut_x[k] <= x and cut_y[k] - 1 < top:
                top = cut_y[k] - 1
        y = lo_y + (step * x - lo_y) % n
        if y <= top:
            total += (top - y) // n + 1
    return total


def integer_rank(rows):
    """Rank over Q of an integer matrix given as a list of row lists (Bareiss)."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    nrows = len(m)
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank == nrows:
            break
        pivot = None
        for r in range(rank, nrows):
            if m[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, nrows):
            a = m[r][col]
            row = m[r]
            prow = m[rank]
            for c in range(col + 1, ncols):
                row[c] = (p * row[c] - a * prow[c]) // prev
            row[col] = 0
        prev = p
        rank += 1
    return rank
