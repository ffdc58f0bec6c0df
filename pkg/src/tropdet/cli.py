"""Command-line front end.

Subcommands: bound, construct, tdet, moves, verify.  Exit codes are part
of the contract so CI scripts can tell falsification from resource
limits:

    0  success (and, for verify, both bounds certified)
    1  verify found a mismatch between oracle and formula
    2  usage, parameter, or matrix parse error
    3  internal postcondition failure (a construction bug, not bad input)
    4  enumeration cap exceeded
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .assignment import sorting_cost, tdet, tropdet
from .bounds import bound_report, lower_bound, upper_bound
from .constructions import ConstructionError, construct_lower, construct_upper
from .matrix import IntMatrix, format_matrix_text, parse_matrix_text
from .oracle import DEFAULT_POINT_CAP, CapExceededError, verify_bounds
from .params import ProblemParams, derive_params

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_POSTCONDITION = 3
EXIT_CAP = 4


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _params_from_args(args) -> ProblemParams:
    return derive_params(args.k, args.l, args.m, args.n)


def _read_matrix(path: str) -> IntMatrix:
    text = Path(path).read_text(encoding="utf-8")
    return parse_matrix_text(text)


def cmd_bound(args) -> int:
    p = _params_from_args(args)
    report = bound_report(p)
    if args.json:
        payload = {
            "k": p.k,
            "l": p.l,
            "m": p.m,
            "n": p.n,
            "q": p.q,
            "r": p.r,
            "x": report.xy.x,
            "y": report.xy.y,
            "L": report.L,
            "U": report.U,
            "lower_regime": report.lower_regime.value,
            "upper_regime": report.upper_regime.value,
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"q = {p.q}")
        print(f"r = {p.r}")
        print(f"x = {report.xy.x}")
        print(f"y = {report.xy.y}")
        print(f"L = {report.L}")
        print(f"U = {report.U}")
        print(f"lower_regime = {report.lower_regime.value}")
        print(f"upper_regime = {report.upper_regime.value}")
    return EXIT_OK


def cmd_construct(args) -> int:
    p = _params_from_args(args)
    if args.target == "lower":
        a = construct_lower(p)
        value = tdet(a).value
        expected = lower_bound(p)
        label = "tdet"
    else:
        a = construct_upper(p)
        value = tropdet(a).value
        expected = upper_bound(p)
        label = "tropdet"
    if value != expected:
        raise ConstructionError(f"{label} = {value} but bound says {expected}")
    text = format_matrix_text(a)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    print(f"{label} = {value} (= {args.target} bound); member: yes", file=sys.stderr)
    return EXIT_OK


def cmd_tdet(args) -> int:
    a = _read_matrix(args.file)
    result = tropdet(a) if args.min else tdet(a)
    print(result.value)
    if args.witness:
        print(" ".join(f"({i},{j})" for i, j in result.cells))
    return EXIT_OK


def cmd_moves(args) -> int:
    a = _read_matrix(args.file)
    moves = sorting_cost(a)
    print(moves)
    for color, pail in tdet(a).cells:
        print(f"color {color} -> pail {pail}")
    return EXIT_OK


def cmd_verify(args) -> int:
    p = _params_from_args(args)
    report = verify_bounds(p, cap=args.cap)
    if args.json:
        payload = {
            "k": p.k,
            "l": p.l,
            "m": p.m,
            "n": p.n,
            "points_enumerated": report.points_enumerated,
            "oracle_min_tdet": report.oracle_min_tdet,
            "oracle_max_tropdet": report.oracle_max_tropdet,
            "formula_L": report.formula_L,
            "formula_U": report.formula_U,
            "lower_match": report.lower_match,
            "upper_match": report.upper_match,
            "argmin_example": report.argmin_example.data.tolist(),
            "argmax_example": report.argmax_example.data.tolist(),
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"points = {report.points_enumerated}")
        print(f"oracle_min_tdet = {report.oracle_min_tdet}  formula_L = {report.formula_L}")
        print(f"oracle_max_tropdet = {report.oracle_max_tropdet}  formula_U = {report.formula_U}")
        print(f"lower_match = {str(report.lower_match).lower()}")
        print(f"upper_match = {str(report.upper_match).lower()}")
    if report.lower_match and report.upper_match:
        return EXIT_OK
    return EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tropdet",
        description=(
            "Tropical determinants of integer matrices with fixed margins: "
            "sharp bounds, extremal constructions, and exhaustive certification."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_params(sp):
        sp.add_argument("k", type=int)
        sp.add_argument("l", type=int)
        sp.add_argument("m", type=int)
        sp.add_argument("n", type=int)

    sp = sub.add_parser("bound", help="closed-form bounds L and U for (k, l, m, n)")
    add_params(sp)
    sp.add_argument("--json", action="store_true", help="emit one JSON object")
    sp.set_defaults(func=cmd_bound)

    sp = sub.add_parser("construct", help="build a matrix attaining a sharp bound")
    add_params(sp)
    sp.add_argument("--target", choices=("lower", "upper"), default="lower")
    sp.add_argument("--out", metavar="FILE", help="write matrix here instead of stdout")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("tdet", help="tropical determinant of a matrix file")
    sp.add_argument("file")
    sp.add_argument("--min", action="store_true", help="minimize over transversals")
    sp.add_argument("--witness", action="store_true", help="also print optimal cells")
    sp.set_defaults(func=cmd_tdet)

    sp = sub.add_parser("moves", help="minimal ball moves to sort the matrix file")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_moves)

    sp = sub.add_parser("verify", help="certify both bounds by exhaustive enumeration")
    add_params(sp)
    sp.add_argument("--cap", type=int, default=DEFAULT_POINT_CAP)
    sp.add_argument("--json", action="store_true", help="emit one JSON object")
    sp.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OverflowError, FileNotFoundError) as exc:
        # Parameter validation, matrix parsing, and orientation errors.
        return _fail(str(exc), EXIT_USAGE)
    except CapExceededError as exc:
        return _fail(str(exc), EXIT_CAP)
    except ConstructionError as exc:
        return _fail(str(exc), EXIT_POSTCONDITION)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
