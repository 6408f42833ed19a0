"""Command line interface.

Exit codes: 0 pass/yes, 1 fail/no, 2 input error, 3 inconclusive.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import serialize as io
from .algebra import Ring, exact_zerodivisor_partner, format_element, parse_element
from .conjugacy import DEFAULT_BUDGET, are_conjugate, is_indecomposable_probe, wild_family
from .errors import NotLinear, NotNormalizable, TotReflError
from .field import FieldSpec
from .linmat import LinearMatrix, random_scramble
from .normalform import normalize
from .trcheck import DEFAULT_DEPTH, check_tuple, total_acyclicity_check, total_acyclicity_check_raw
from .tuples import presentation_from_tuple, random_tuple

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class InputError(Exception):
    pass


def _emit(doc, out=None):
    text = io.dumps(doc)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _field(name):
    try:
        return FieldSpec.from_name(name)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _ring(args):
    if args.i < 2:
        raise InputError("--i must be at least 2")
    return Ring(args.i, _field(args.field))


def cmd_check(args):
    doc = io.load(args.file)
    if args.raw:
        d = io.linear_from_json(doc)
        rep = total_acyclicity_check_raw(d)
        out = {"schema_version": "1", "total_acyclicity": rep.to_dict(), "passed": rep.passed}
        _emit(out)
        return EXIT_OK if rep.passed else EXIT_FAIL
    t = io.tuple_from_json(doc)
    out = check_tuple(t, depth=args.depth, oracle=args.oracle)
    _emit(out)
    return EXIT_OK if out["passed"] else EXIT_FAIL


def cmd_normalize(args):
    d = io.matrix_from_json(io.load(args.file))
    try:
        nf = normalize(d)
    except (NotLinear, NotNormalizable) as exc:
        _emit({"schema_version": "1", "error": type(exc).__name__, "message": str(exc)})
        return EXIT_FAIL
    out = io.tuple_to_json(nf.tuple)
    if args.factors:
        out = {"schema_version": "1", "tuple": out,
               "row_ops": io.smatrix_to_json(nf.row_ops),
               "col_ops": io.smatrix_to_json(nf.col_ops)}
    _emit(out, args.out)
    return EXIT_OK


def cmd_conjugate(args):
    a = io.tuple_from_json(io.load(args.a))
    b = io.tuple_from_json(io.load(args.b))
    if a.ring != b.ring or a.n != b.n:
        raise InputError("tuples differ in field, i or n")
    dec = are_conjugate(a, b, budget=args.budget, seed=args.seed)
    _emit({"schema_version": "1", **dec.to_dict()})
    if dec.conjugate:
        return EXIT_OK
    return EXIT_FAIL if dec.certain else EXIT_INCONCLUSIVE


def cmd_zerodivisor(args):
    R = _ring(args)
    try:
        s = parse_element(R, args.expr)
    except (ValueError, KeyError) as exc:
        raise InputError(str(exc)) from None
    t = exact_zerodivisor_partner(s)
    if t is None:
        print("not exact")
        return EXIT_FAIL
    print(format_element(t))
    return EXIT_OK


def _write_tuples(tuples, out_dir, prefix):
    if out_dir:
        os.makedirs(out_dir, exist_ok=True)
        for k, t in enumerate(tuples):
            _emit(io.tuple_to_json(t), os.path.join(out_dir, f"{prefix}_{k:03d}.json"))
    else:
        _emit({"schema_version": "1", "tuples": [io.tuple_to_json(t) for t in tuples]})


def cmd_random(args):
    R = _ring(args)
    if args.n < 1 or args.count < 0:
        raise InputError("--n must be positive and --count non-negative")
    tuples = [random_tuple(R, args.n, args.seed, args.height, k) for k in range(args.count)]
    _write_tuples(tuples, args.out, "tuple")
    return EXIT_OK


def cmd_scramble(args):
    t = io.tuple_from_json(io.load(args.file))
    _, _, d = random_scramble(presentation_from_tuple(t), args.seed)
    _emit(io.smatrix_to_json(d), args.out)
    return EXIT_OK


def cmd_family(args):
    R = _ring(args)
    try:
        lambdas = [R.field.parse(v) for v in args.lambdas.split(",")]
        family = wild_family(args.n, lambdas, R, budget=args.budget)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    members = []
    ok = True
    for lam, t in zip(lambdas, family):
        rep = total_acyclicity_check(t)
        probe = is_indecomposable_probe(t, budget=args.budget)
        ok = ok and rep.passed
        members.append({"lambda": R.field.format(lam), "totally_reflexive": rep.passed,
                        "indecomposability": probe.to_dict()})
    if args.out:
        _write_tuples(family, args.out, "family")
    summary = {"schema_version": "1", "field": R.field.name, "i": R.i, "n": args.n,
               "pairwise_non_conjugate": True, "members": members, "passed": ok}
    if not args.out:
        summary["tuples"] = [io.tuple_to_json(t) for t in family]
    _emit(summary)
    return EXIT_OK if ok else EXIT_FAIL


def build_parser():
    p = argparse.ArgumentParser(prog="totrefl", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="verify total reflexivity of a tuple module")
    c.add_argument("file")
    c.add_argument("--depth", type=int, default=DEFAULT_DEPTH)
    c.add_argument("--oracle", action="store_true", help="also run Ext, biduality and length checks")
    c.add_argument("--raw", action="store_true", help="file holds a raw linear matrix, not a tuple")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("normalize", help="reduce a presentation matrix to x I + sum B_j y_j")
    c.add_argument("file")
    c.add_argument("--factors", action="store_true")
    c.add_argument("--out")
    c.set_defaults(func=cmd_normalize)

    c = sub.add_parser("conjugate", help="decide simultaneous conjugacy of two tuples")
    c.add_argument("a")
    c.add_argument("b")
    c.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    c.add_argument("--seed", type=int, default=0)
    c.set_defaults(func=cmd_conjugate)

    c = sub.add_parser("zerodivisor", help="exact zerodivisor partner of a linear form")
    c.add_argument("expr")
    c.add_argument("--i", type=int, default=2)
    c.add_argument("--field", default="Q")
    c.set_defaults(func=cmd_zerodivisor)

    c = sub.add_parser("random", help="seeded random tuples")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--i", type=int, default=2)
    c.add_argument("--field", default="Q")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--count", type=int, default=1)
    c.add_argument("--height", type=int, default=3)
    c.add_argument("--out")
    c.set_defaults(func=cmd_random)

    c = sub.add_parser("scramble", help="seeded invertible row/column scramble of a tuple presentation")
    c.add_argument("file")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--out")
    c.set_defaults(func=cmd_scramble)

    c = sub.add_parser("family", help="Jordan-block family of pairwise non-isomorphic modules")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--lambdas", required=True, help="comma-separated distinct scalars")
    c.add_argument("--i", type=int, default=2)
    c.add_argument("--field", default="Q")
    c.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    c.add_argument("--out")
    c.set_defaults(func=cmd_family)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, io.SchemaError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except TotReflError as exc:
        if isinstance(exc, NotLinear) and args.command == "zerodivisor":
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INPUT
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
