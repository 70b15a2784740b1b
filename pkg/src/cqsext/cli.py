"""Command-line interface: ``cqsext {info,quiver,ext,tor,check,render}``.

Exit codes: 0 success, 1 failed invariant check, 2 invalid parameters,
3 output file not writable.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import checks
from .divisors import canonical_divisor, class_divisor, mingens, parse_divisor, vertex
from .exttor import InvalidIndex, ext_i, tor_i
from .lattice import InvalidParameters, make_cqs
from .quiver import quiver_for
from .render import REGIONS, render

EXIT_FAIL = 1
EXIT_PARAMS = 2
EXIT_OUTPUT = 3

# options whose value may start with a minus sign, e.g. "--D -3,0"
_DIVISOR_OPTIONS = {"--D", "--Dp", "--polyhedron", "--below", "--abelow", "--link"}
_NEGATIVE_PAIR = re.compile(r"^-\d+,-?\d+$")


class UsageError(Exception):
    pass


def rational_json(v) -> dict:
    v = Fraction(v)
    return {"num": v.numerator, "den": v.denominator}


def vector_json(u) -> list:
    return [rational_json(u[0]), rational_json(u[1])]


def _fmt_rational(v) -> str:
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _fmt_vector(u) -> str:
    return f"({_fmt_rational(u[0])},{_fmt_rational(u[1])})"


def preprocess_argv(argv: list) -> list:
    """Glue ``--D -3,0`` into ``--D=-3,0`` so argparse does not read ``-3,0`` as a flag."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _DIVISOR_OPTIONS and i + 1 < len(argv) and _NEGATIVE_PAIR.match(argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def _cqs(args):
    return make_cqs(args.n, args.q)


def emit(text: str, path) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {path}: {exc.strerror or exc}", file=sys.stderr)
        raise SystemExit(EXIT_OUTPUT)


def dumps(data) -> str:
    return json.dumps(data, indent=2) + "\n"


# info

def info_dict(cqs) -> dict:
    return {
        "n": cqs.n,
        "q": cqs.q,
        "hilbert_basis": [[u[0], u[1]] for u in cqs.hilbert_basis],
        "vertex_K": vector_json(vertex(cqs, canonical_divisor())),
        "classes": [
            {
                "index": i,
                "divisor": list(class_divisor(i)),
                "vertex": vector_json(vertex(cqs, class_divisor(i))),
                "mingens": [[g[0], g[1]] for g in mingens(cqs, class_divisor(i))],
            }
            for i in range(cqs.n)
        ],
    }


def cmd_info(args) -> int:
    cqs = _cqs(args)
    if args.json:
        emit(dumps(info_dict(cqs)), args.out)
        return 0
    lines = [
        f"n = {cqs.n}, q = {cqs.q}",
        "Hilbert basis: " + ", ".join(_fmt_vector(u) for u in cqs.hilbert_basis),
        f"vertex(K) = {_fmt_vector(vertex(cqs, canonical_divisor()))}",
        f"{cqs.n} classes:",
    ]
    for i in range(cqs.n):
        D = class_divisor(i)
        gens = ", ".join(_fmt_vector(g) for g in mingens(cqs, D))
        lines.append(f"  E{i}: vertex {_fmt_vector(vertex(cqs, D))}  mingens {gens}")
    emit("\n".join(lines) + "\n", args.out)
    return 0


# quiver

def cmd_quiver(args) -> int:
    Q = quiver_for(_cqs(args))
    emit(Q.to_dot() if args.dot else Q.to_json(), args.out)
    return 0


# ext / tor

def _divisor_arg(text, cls, name):
    if cls is not None:
        if text is not None:
            raise UsageError(f"give either {name} or its class, not both")
        return class_divisor(cls)
    if text is None:
        raise UsageError(f"{name} is required")
    try:
        return parse_divisor(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _homological(args, func) -> int:
    cqs = _cqs(args)
    if args.D_class is not None and not 0 <= args.D_class < cqs.n:
        raise UsageError(f"class index must be in [0, {cqs.n}), got {args.D_class}")
    if args.Dp_class is not None and not 0 <= args.Dp_class < cqs.n:
        raise UsageError(f"class index must be in [0, {cqs.n}), got {args.Dp_class}")
    D = _divisor_arg(args.D, args.D_class, "--D")
    Dp = _divisor_arg(args.Dp, args.Dp_class, "--Dp")
    support = func(cqs, None, D, Dp, args.i)
    data = support.to_json_dict()
    if args.json or args.out:
        emit(dumps(data), args.out)
        return 0
    lines = [f"dim = {data['dim']}"]
    for item in data["degrees"]:
        lines.append(f"  ({item['u'][0]},{item['u'][1]})  mult {item['mult']}  {' '.join(item['labels'])}")
    emit("\n".join(lines) + "\n", None)
    return 0


def cmd_ext(args) -> int:
    return _homological(args, ext_i)


def cmd_tor(args) -> int:
    return _homological(args, tor_i)


# check

def cmd_check(args) -> int:
    if (args.n is None) != (args.q is None):
        raise UsageError("give both n and q, or neither for a sweep")
    if args.max_i < 1:
        raise UsageError(f"--max-i must be >= 1, got {args.max_i}")
    try:
        settings = checks.scale_settings()
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    targets = None
    if args.n is not None:
        make_cqs(args.n, args.q)
        targets = [(args.n, args.q)]
    suites = list(checks.SUITES) if args.suite == "all" else [args.suite]
    tasks = checks.plan(suites, targets, args.max_i, args.seed, settings)
    results = checks.run(tasks, args.workers)

    informational = []
    for r in results:
        info = r.pop("informational", None)
        if info is not None:
            informational.append({"n": r["n"], "q": r["q"], **info})
    passed = all(r["passed"] for r in results)
    report = {
        "scale": settings["name"],
        "seed": args.seed,
        "max_i": args.max_i,
        "passed": passed,
        "suites": results,
        "informational": informational,
    }
    if args.json or args.out:
        emit(dumps(report), args.out)
    if not args.json:
        for r in results:
            extra = f" ({r['skipped']})" if r.get("skipped") else ""
            status = "PASS" if r["passed"] else "FAIL"
            print(f"{status} {r['suite']:<11} n={r['n']} q={r['q']} checked={len(r['checked'])}{extra}")
        disagreements = sum(len(x["ext2_symmetry_disagreements"]) for x in informational)
        if informational:
            print(f"info: i=2 symmetry sweep, {disagreements} disagreeing pairs (not asserted)")
    if not passed:
        bad = next(r for r in results if not r["passed"])
        print(f"counterexample: suite={bad['suite']} n={bad['n']} q={bad['q']} "
              f"{json.dumps(bad['failures'][0])}", file=sys.stderr)
        return EXIT_FAIL
    return 0


# render

def cmd_render(args) -> int:
    cqs = _cqs(args)
    kind = next(k for k in REGIONS if getattr(args, k) is not None)
    try:
        D = parse_divisor(getattr(args, kind))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.scale <= 0:
        raise UsageError("--scale must be positive")
    fmt = "tikz" if args.tikz else "svg"
    emit(render(cqs, kind, D, fmt, args.scale), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cqsext",
        description="Multigraded Ext and Tor between Weil divisors on cyclic quotient surface singularities.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def with_nq(sp, optional=False):
        nargs = "?" if optional else None
        sp.add_argument("n", type=int, nargs=nargs)
        sp.add_argument("q", type=int, nargs=nargs)
        sp.add_argument("--out", metavar="PATH", help="write to PATH instead of stdout")

    sp = sub.add_parser("info", help="Hilbert basis, class vertices and generators")
    with_nq(sp)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_info)

    sp = sub.add_parser("quiver", help="export the syzygy quiver")
    with_nq(sp)
    fmt = sp.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON (default)")
    fmt.add_argument("--dot", action="store_true", help="Graphviz DOT")
    sp.set_defaults(func=cmd_quiver)

    for name, func in (("ext", cmd_ext), ("tor", cmd_tor)):
        sp = sub.add_parser(name, help=f"multigraded {name.capitalize()}^i(D, D')")
        with_nq(sp)
        sp.add_argument("--D", help="first divisor as a0,a1")
        sp.add_argument("--Dp", help="second divisor as a0,a1")
        sp.add_argument("--class", dest="D_class", type=int, metavar="I", help="use E^I for D")
        sp.add_argument("--class-p", dest="Dp_class", type=int, metavar="J", help="use E^J for D'")
        sp.add_argument("--i", type=int, default=1, help="homological index (>= 1)")
        sp.add_argument("--json", action="store_true")
        sp.set_defaults(func=func)

    sp = sub.add_parser("check", help="run the verification suites")
    with_nq(sp, optional=True)
    sp.add_argument("--suite", default="all", choices=[*checks.SUITES, "all"])
    sp.add_argument("--max-i", type=int, default=3)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("render", help="draw a polyhedron or staircase region")
    with_nq(sp)
    obj = sp.add_mutually_exclusive_group(required=True)
    for kind in REGIONS:
        obj.add_argument(f"--{kind}", metavar="A0,A1")
    fmt = sp.add_mutually_exclusive_group()
    fmt.add_argument("--svg", action="store_true", help="SVG (default)")
    fmt.add_argument("--tikz", action="store_true")
    sp.add_argument("--scale", type=int, default=20, help="pixels per unit in SVG")
    sp.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(preprocess_argv(argv))
    try:
        return args.func(args)
    except (InvalidParameters, InvalidIndex, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS


if __name__ == "__main__":
    sys.exit(main())
