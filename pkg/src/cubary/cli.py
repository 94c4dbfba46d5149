"""Command-line interface.

Commands compose over pipes: complexes travel as JSON on stdin/stdout,
so generation, subdivision, vector computation, and verification can be
chained and each identity stays independently scriptable.

Exit codes: 0 success; 1 I/O, parse, or argument failure; 2 invalid
complex; 3 face budget exceeded; 4 coefficient-matrix cross-check
failure; 5 verification suite failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from decimal import Decimal, localcontext
from fractions import Fraction

from . import corpus as corpus_mod
from .complex_core import CubicalComplex, from_voxels, gen_cube, gen_cube_boundary, parse_voxel_text, validate
from .face_vectors import f_vector, hc_from_hsc, hsc_from_f, summary
from .polytools import is_real_rooted, shape_predicates
from .subdivision import DEFAULT_FACE_BUDGET, FaceBudgetExceeded, subdivide_n
from .transform import (
    b_matrix,
    c_matrix,
    hc_of_subdivision,
    hc_poly_of_iterate,
    hsc_of_subdivision,
    hsc_poly_of_iterate,
    limit_distance_hc,
    limit_distance_hsc,
)
from .verify import SUITES, run_suites

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INVALID = 2
EXIT_BUDGET = 3
EXIT_CROSSCHECK = 4
EXIT_VERIFY = 5


class _Parser(argparse.ArgumentParser):
    """argparse variant whose usage errors exit with code 1, not 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(self.exit_with(message))

    def exit_with(self, message):
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        return EXIT_INPUT


def _fail(code: int, message: str) -> int:
    print(f"cubary: error: {message}", file=sys.stderr)
    return code


def _read_complex_stdin() -> CubicalComplex:
    return CubicalComplex.from_json(sys.stdin.read())


def _validated(K: CubicalComplex) -> CubicalComplex:
    report = validate(K)
    if not report.ok:
        raise _InvalidComplex(report.violations)
    return K


class _InvalidComplex(Exception):
    def __init__(self, violations):
        self.violations = violations
        super().__init__("; ".join(violations))


def _emit(obj) -> None:
    print(json.dumps(obj, separators=(",", ":")))


def cmd_gen(args) -> int:
    try:
        if args.cube is not None:
            K = gen_cube(args.cube)
        elif args.cube_boundary is not None:
            K = gen_cube_boundary(args.cube_boundary)
        else:
            with open(args.voxels, "r", encoding="utf-8") as fh:
                K = from_voxels(parse_voxel_text(fh.read()))
    except (OSError, ValueError) as exc:
        return _fail(EXIT_INPUT, str(exc))
    report = validate(K)
    if not report.ok:
        return _fail(EXIT_INVALID, f"generated complex failed validation: {report.violations[0]}")
    _emit(K.to_json_obj())
    return EXIT_OK


def cmd_subdivide(args) -> int:
    try:
        K = _validated(_read_complex_stdin())
        K = subdivide_n(K, args.n, face_budget=args.budget)
    except FaceBudgetExceeded as exc:
        return _fail(EXIT_BUDGET, str(exc))
    except _InvalidComplex as exc:
        return _fail(EXIT_INVALID, f"invalid complex: {exc}")
    except ValueError as exc:
        return _fail(EXIT_INPUT, str(exc))
    _emit(K.to_json_obj())
    return EXIT_OK


def cmd_vectors(args) -> int:
    try:
        K = _validated(_read_complex_stdin())
    except _InvalidComplex as exc:
        return _fail(EXIT_INVALID, f"invalid complex: {exc}")
    except ValueError as exc:
        return _fail(EXIT_INPUT, str(exc))
    payload = summary(K)
    payload["hsc_shape"] = shape_predicates(payload["hsc"])
    payload["hc_shape"] = shape_predicates(payload["hc"])
    _emit(payload)
    return EXIT_OK


def cmd_coeffs(args) -> int:
    if args.d < 1:
        return _fail(EXIT_INPUT, "d must be >= 1")
    try:
        M = b_matrix(args.d) if args.matrix == "B" else c_matrix(args.d)
    except RuntimeError as exc:
        return _fail(EXIT_CROSSCHECK, f"cross-check failure: {exc}")
    _emit(M.to_json_obj())
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        if args.corpus is not None:
            complexes = corpus_mod.default_corpus()
        else:
            complexes = [("stdin", _validated(_read_complex_stdin()))]
    except _InvalidComplex as exc:
        return _fail(EXIT_INVALID, f"invalid complex: {exc}")
    except ValueError as exc:
        return _fail(EXIT_INPUT, str(exc))
    report = run_suites(args.suite, complexes)
    _emit(report)
    if not report["ok"]:
        first = next(r for r in report["checks"] if not r["ok"])
        return _fail(
            EXIT_VERIFY,
            f"check {first['check']} failed on {first['item']}: {first['detail']}",
        )
    return EXIT_OK


def _decimal10(x: Fraction) -> str:
    with localcontext() as ctx:
        ctx.prec = 10
        return str(Decimal(x.numerator) / Decimal(x.denominator))


def cmd_limit(args) -> int:
    try:
        K = _validated(_read_complex_stdin())
    except _InvalidComplex as exc:
        return _fail(EXIT_INVALID, f"invalid complex: {exc}")
    except ValueError as exc:
        return _fail(EXIT_INPUT, str(exc))
    f = f_vector(K)
    d = f.d
    hsc = hsc_from_f(f)
    if args.which == "hc" and d < 2:
        return _fail(EXIT_INPUT, "long h-vector limits need d >= 2")
    f_top = f.entries[-1]
    chi = -1 + sum((-1) ** i * fi for i, fi in enumerate(f.entries))
    rows = []
    for n in range(args.max_n + 1):
        scale = Fraction(1, 2 ** (n * (d - 1)))
        if args.which == "hsc":
            dist = limit_distance_hsc(hsc, f_top, n)
            vec = [x * scale for x in (hsc_poly_of_iterate(hsc, n)).padded(d)]
        else:
            hc = hc_from_hsc(hsc)
            dist = limit_distance_hc(hc, f_top, chi, n)
            vec = [x * scale for x in hc_poly_of_iterate(hsc, chi, n).padded(d + 1)]
        shapes = shape_predicates(vec)
        rows.append(
            {
                "n": n,
                "distance": str(dist),
                "distance_decimal": _decimal10(dist),
                "nonnegative": shapes["nonnegative"],
                "symmetric": shapes["symmetric"],
                "unimodal": shapes["unimodal"],
            }
        )
    _emit({"which": args.which, "d": d, "rows": rows})
    return EXIT_OK


def cmd_mine(args) -> int:
    if not 0 <= args.seed < 2**64:
        return _fail(EXIT_INPUT, "seed must be a 64-bit unsigned integer")
    if args.dim < 1:
        return _fail(EXIT_INPUT, "dim must be >= 1")
    if args.trials < 0:
        return _fail(EXIT_INPUT, "trials must be >= 0")
    import random

    rng = random.Random(args.seed)
    findings = 0
    for trial in range(args.trials):
        spec = corpus_mod.bernoulli_voxel_spec(rng, args.dim)
        K = from_voxels(spec)
        f = f_vector(K)
        hsc = hsc_from_f(f)
        if args.target == "unimodality":
            vec = hsc.entries
            if not all(x >= 0 for x in vec):
                continue
            out = hsc_of_subdivision(hsc).entries
            ok = shape_predicates(out)["unimodal"]
        else:
            hc = hc_from_hsc(hsc)
            vec = hc.entries
            if not all(x >= 0 for x in vec):
                continue
            out = hc_of_subdivision(hc).entries
            ok = is_real_rooted(hc_of_subdivision(hc).polynomial())
        if not ok:
            findings += 1
            _emit(
                {
                    "type": "finding",
                    "trial": trial,
                    "target": args.target,
                    "dim": args.dim,
                    "corners": [list(c) for c in spec.corners],
                    "f": list(f.entries),
                    "vector": [str(x) for x in vec],
                    "subdivided_vector": [str(x) for x in out],
                }
            )
    _emit(
        {
            "type": "summary",
            "target": args.target,
            "dim": args.dim,
            "trials": args.trials,
            "seed": args.seed,
            "findings": findings,
        }
    )
    return EXIT_OK


def build_parser() -> _Parser:
    p = _Parser(prog="cubary", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a complex as JSON")
    src = g.add_mutually_exclusive_group(required=True)
    src.add_argument("--cube", type=int, metavar="D", help="all faces of the D-cube")
    src.add_argument(
        "--cube-boundary", type=int, metavar="D", help="proper faces of the D-cube"
    )
    src.add_argument("--voxels", metavar="FILE", help="voxel text file")
    g.set_defaults(fn=cmd_gen)

    s = sub.add_parser("subdivide", help="barycentrically subdivide a complex n times")
    s.add_argument("-n", type=int, required=True, help="number of rounds (>= 0)")
    s.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_FACE_BUDGET,
        help=f"face budget per constructed step (default {DEFAULT_FACE_BUDGET})",
    )
    s.set_defaults(fn=cmd_subdivide)

    v = sub.add_parser("vectors", help="f, short/long h-vectors, Euler characteristic")
    v.set_defaults(fn=cmd_vectors)

    c = sub.add_parser("coeffs", help="dump a transform coefficient matrix")
    c.add_argument("--matrix", choices=("B", "C"), required=True)
    c.add_argument("-d", type=int, required=True)
    c.set_defaults(fn=cmd_coeffs)

    w = sub.add_parser("verify", help="run identity/oracle suites")
    w.add_argument("--suite", choices=SUITES + ("all",), default="all")
    w.add_argument(
        "--corpus",
        choices=("default",),
        help="run over the built-in corpus instead of a stdin complex",
    )
    w.set_defaults(fn=cmd_verify)

    li = sub.add_parser("limit", help="distances to the iterated-subdivision limit")
    li.add_argument("--max-n", type=int, required=True, dest="max_n")
    li.add_argument("--which", choices=("hsc", "hc"), default="hsc")
    li.set_defaults(fn=cmd_limit)

    m = sub.add_parser(
        "mine",
        help="random search for counterexamples",
        description=(
            "Random model: each unit cube of the side-4 grid in the given "
            "dimension is kept independently with probability 1/2 (empty "
            "draws are redrawn). Complexes whose target vector has a "
            "negative entry are skipped. Findings and a trailing summary "
            "are emitted as JSON lines; output is a pure function of the "
            "arguments."
        ),
    )
    m.add_argument("--target", choices=("unimodality", "realroot"), required=True)
    m.add_argument("--dim", type=int, required=True)
    m.add_argument("--trials", type=int, required=True)
    m.add_argument("--seed", type=int, required=True, help="64-bit unsigned integer")
    m.set_defaults(fn=cmd_mine)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
