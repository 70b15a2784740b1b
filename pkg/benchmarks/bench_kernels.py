"""Compare the compiled kernels with the pure-Python fallback.

Kernel timings call both implementations directly on identical inputs;
the end-to-end timings run a small check sweep in a subprocess per backend.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--no-sweep]
"""

import argparse
import os
import random
import subprocess
import sys
import time

from cqsext import _kernels_py
from cqsext.lattice import make_cqs
from cqsext.oracle import presentation

try:
    from cqsext import _kernels as compiled
except ImportError:
    compiled = None


def staircase_workload(rng, count=400):
    jobs = []
    for _ in range(count):
        n = rng.randint(5, 40)
        lo_x, lo_y = rng.randint(-50, 50), rng.randint(-50, 50)
        w, h = rng.randint(n, 4 * n), rng.randint(n, 4 * n)
        cuts = sorted((lo_x + rng.randint(0, w), lo_y + rng.randint(0, h)) for _ in range(rng.randint(1, 8)))
        jobs.append((lo_x, lo_y, lo_x + w, lo_y + h, [c[0] for c in cuts], [c[1] for c in cuts], n,
                     rng.randint(0, n - 1)))
    return jobs


def rank_workload(rng, count=300):
    # degreewise matrices shaped like the oracle's: sparse, entries in {-1, 0, 1}
    jobs = []
    for _ in range(count):
        cqs = make_cqs(*rng.choice([(7, 3), (11, 4), (13, 5), (17, 7), (19, 8)]))
        D = (rng.randint(-40, 40), rng.randint(-40, 40))
        pres = presentation(cqs, D)
        rows = list(range(pres.F1.rank()))
        cols = list(range(pres.F2.rank()))
        jobs.append(pres.d2.scalar(rows, cols))
    return jobs


def best_of(func, jobs, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        for job in jobs:
            func(*job) if isinstance(job, tuple) else func(job)
        best = min(best, time.perf_counter() - start)
    return best


def sweep_time(pure: bool) -> float:
    env = dict(os.environ, CQS_CHECK_SCALE="quick")
    if pure:
        env["CQSEXT_PURE_PYTHON"] = "1"
    cmd = [sys.executable, "-m", "cqsext.cli", "check", "--suite", "oracle", "--json"]
    start = time.perf_counter()
    subprocess.run(cmd, env=env, check=True, stdout=subprocess.DEVNULL)
    return time.perf_counter() - start


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--no-sweep", action="store_true", help="skip the end-to-end sweep")
    args = ap.parse_args(argv)

    if compiled is None:
        print("compiled extension not built; only the fallback can be timed")
    rng = random.Random(args.seed)
    stairs = staircase_workload(rng)
    ranks = rank_workload(rng)

    rows = [
        ("staircase_points", _kernels_py.staircase_points, getattr(compiled, "staircase_points", None), stairs),
        ("staircase_count", _kernels_py.staircase_count, getattr(compiled, "staircase_count", None), stairs),
        ("integer_rank", _kernels_py.integer_rank, getattr(compiled, "integer_rank", None), ranks),
    ]
    print(f"{'kernel':<18}{'jobs':>6}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for name, py, cy, jobs in rows:
        t_py = best_of(py, jobs, args.repeat)
        if cy is None:
            print(f"{name:<18}{len(jobs):>6}{t_py:>12.4f}{'-':>12}{'-':>10}")
            continue
        for job in jobs[:50]:
            a = py(*job) if isinstance(job, tuple) else py(job)
            b = cy(*job) if isinstance(job, tuple) else cy(job)
            assert a == b, f"{name} backends disagree"
        t_cy = best_of(cy, jobs, args.repeat)
        print(f"{name:<18}{len(jobs):>6}{t_py:>12.4f}{t_cy:>12.4f}{t_py / t_cy:>9.1f}x")

    if not args.no_sweep:
        t_py = sweep_time(pure=True)
        line = f"{'oracle sweep':<18}{'':>6}{t_py:>12.2f}"
        if compiled is not None:
            t_cy = sweep_time(pure=False)
            line += f"{t_cy:>12.2f}{t_py / t_cy:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
