"""Command-line interface: exact reduction results as deterministic JSON.

Subcommands:

* reduce    - full reduction record for (p, d, R), optionally with numeric
              branch residuals (--numeric, --bits, --tolerance-exp)
* construct - build an instance from a prescribed (p, D, u)
* euclid    - classical square-root denesting of sqrt(d + sqrt(R)), or the
              fourth-root variant with --fourth
* classify  - quadratic-field / p-th-power case report
* coeffs    - one coefficient family as an exact JSON array
* verify    - symbolic identity sweep for all odd p up to --p-max
* selftest  - golden-instance acceptance checks, nonzero exit on mismatch

All rational inputs and outputs use the exact text format '-2158' / '6/11';
JSON output is byte-deterministic for identical inputs.  Exit codes: 0 ok,
1 verification failure, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .coeffs import coeff_a, coeff_c, coeff_cprime, coeff_u, system_C
from .exactnum import QuadExt, parse_rational
from .identity import verify_all
from .numeric import DEFAULT_BITS, branch_residuals, decimal_str
from .poly import Poly
from .reduction import (
    ReductionError,
    classify,
    construct_example,
    euclid_biquadratic,
    euclid_denest,
    reduce_radical,
)


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _odd_p(text: str) -> int:
    value = int(text)
    if value < 3 or value % 2 == 0:
        raise argparse.ArgumentTypeError(f"p must be an odd integer >= 3, got {value}")
    return value


# Let argparse accept negative rationals like -13/9 as option values rather
# than mistaking them for flags.
_NEGATIVE_RATIONAL = re.compile(r"^-\d+(/\d+)?$")


def _new_parser(factory, *args, **kwargs):
    parser = factory(*args, **kwargs)
    parser._negative_number_matcher = _NEGATIVE_RATIONAL
    return parser


def build_parser() -> argparse.ArgumentParser:
    parser = _new_parser(
        argparse.ArgumentParser,
        prog="radreduce",
        description="Exact degree reduction and denesting of radicals (d + sqrt(R))^(1/p).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_reduce = sub.add_parser("reduce", help="reduce (d + sqrt(R))^(1/p)")
    p_reduce.add_argument("--p", type=_odd_p, required=True)
    p_reduce.add_argument("--d", type=_rational, required=True)
    p_reduce.add_argument("--R", type=_rational, required=True)
    p_reduce.add_argument("--numeric", action="store_true", help="add branch residuals")
    p_reduce.add_argument("--bits", type=int, default=DEFAULT_BITS)
    p_reduce.add_argument(
        "--tolerance-exp",
        type=int,
        default=None,
        help="residual bound exponent E: require residual < 2^-E (default bits - 56)",
    )

    p_construct = sub.add_parser("construct", help="build an instance from (p, D, u)")
    p_construct.add_argument("--p", type=_odd_p, required=True)
    p_construct.add_argument("--D", type=_rational, required=True)
    p_construct.add_argument("--u", type=_rational, required=True)

    p_euclid = sub.add_parser("euclid", help="denest sqrt(d + sqrt(R))")
    p_euclid.add_argument("--d", type=_rational, required=True)
    p_euclid.add_argument("--R", type=_rational, required=True)
    p_euclid.add_argument(
        "--fourth", action="store_true", help="fourth-root variant (d + sqrt(R))^(1/4)"
    )

    p_classify = sub.add_parser("classify", help="quadratic-field / p-th-power cases")
    p_classify.add_argument("--p", type=_odd_p, required=True)
    p_classify.add_argument("--d", type=_rational, required=True)
    p_classify.add_argument("--R", type=_rational, required=True)

    p_coeffs = sub.add_parser("coeffs", help="emit one coefficient family")
    p_coeffs.add_argument("--p", type=_odd_p, required=True)
    p_coeffs.add_argument(
        "--family", choices=("c", "a", "cprime", "C", "u"), required=True
    )

    p_verify = sub.add_parser("verify", help="symbolic identity sweep")
    p_verify.add_argument("--p-max", type=int, required=True)

    p_self = sub.add_parser("selftest", help="golden-instance acceptance checks")
    p_self.add_argument("--bits", type=int, default=DEFAULT_BITS)
    p_self.add_argument("--tolerance-exp", type=int, default=None)

    for command_parser in sub.choices.values():
        command_parser._negative_number_matcher = _NEGATIVE_RATIONAL
    return parser


def cmd_reduce(args) -> int:
    result = reduce_radical(args.p, args.d, args.R)
    obj = result.to_json()
    if args.numeric:
        tol_exp = args.tolerance_exp if args.tolerance_exp is not None else args.bits - 56
        if result.branches is None:
            obj["numeric"] = {
                "bits": args.bits,
                "note": "u is irrational; no branch expressions to evaluate",
            }
        elif result.params.R < 0:
            obj["numeric"] = {
                "bits": args.bits,
                "note": "branch values are non-real (R < 0); real-mode residuals unavailable",
            }
        else:
            res = branch_residuals(result, args.bits)
            obj["numeric"] = {
                "bits": args.bits,
                "residuals": [decimal_str(r) for r in res["residuals"]],
                "max_residual": decimal_str(res["max_residual"]),
                "residual_bound": f"2^-{tol_exp}",
                "residual_bound_ok": bool(
                    res["max_residual"] < Fraction(1, 2**tol_exp)
                ),
                "branch_signs_consistent": res["branch_signs_consistent"],
            }
    _emit(obj)
    return 0


def cmd_construct(args) -> int:
    params, g = construct_example(args.p, args.D, args.u)
    _emit(
        {
            "p": params.p,
            "d": str(params.d),
            "R": str(params.R),
            "D": str(params.D),
            "u": str(Fraction(args.u)),
            "g": g.to_json_coeffs(),
        }
    )
    return 0


def cmd_euclid(args) -> int:
    if args.fourth:
        denesting = euclid_biquadratic(args.d, args.R)
        kind = "fourth"
    else:
        denesting = euclid_denest(args.d, args.R)
        kind = "square"
    obj = {
        "kind": kind,
        "d": str(Fraction(args.d)),
        "R": str(Fraction(args.R)),
        "criterion_holds": denesting is not None,
    }
    if denesting is None:
        obj["detail"] = (
            "d^2 - R is not a rational fourth power"
            if args.fourth
            else "d^2 - R is not a rational square"
        )
        obj["denesting"] = None
    else:
        obj["denesting"] = denesting.to_json()
        obj["certified"] = denesting.certify(args.d, args.R)
    _emit(obj)
    return 0


def cmd_classify(args) -> int:
    _emit(classify(args.p, args.d, args.R).to_json())
    return 0


def cmd_coeffs(args) -> int:
    p = args.p
    half = (p - 1) // 2
    if args.family == "c":
        indices = [2 * k + 1 for k in range(half + 1)]
        values = [coeff_c(p, k) for k in range(half + 1)]
    elif args.family == "a":
        indices = [2 * k for k in range(half + 1)]
        values = [coeff_a(p, k) for k in range(half + 1)]
    elif args.family == "cprime":
        indices = [2 * j + 1 for j in range((p - 3) // 2 + 1)]
        values = [coeff_cprime(p, j) for j in range((p - 3) // 2 + 1)]
    elif args.family == "C":
        indices = [p - 2 * k for k in range(half + 1)]
        values = system_C(p)
    else:
        indices = list(range(1, p))
        values = [coeff_u(p, k) for k in range(1, p)]
    _emit(
        {
            "p": p,
            "family": args.family,
            "indices": indices,
            "values": [str(v) for v in values],
        }
    )
    return 0


def cmd_verify(args) -> int:
    if args.p_max < 3:
        raise ValueError("--p-max must be >= 3")
    reports = [verify_all(p).to_json() for p in range(3, args.p_max + 1, 2)]
    _emit(reports)
    return 0 if all(r["ok"] for r in reports) else 1


def _selftest_checks(bits: int, tol_exp: int | None) -> list[dict]:
    checks: list[dict] = []
    tol = Fraction(1, 2 ** (tol_exp if tol_exp is not None else bits - 56))

    def record(name: str, passed: bool, detail: str = ""):
        checks.append({"name": name, "pass": bool(passed), "detail": detail})

    # Quintic golden instance (p=5, d=2, R=5).
    r5 = reduce_radical(5, 2, 5)
    record(
        "quintic-exact",
        r5.params.D == -1
        and r5.g == Poly([Fraction(-1)] + [0] * 4 + [Fraction(-4)] + [0] * 4 + [Fraction(1)])
        and r5.f == Poly([Fraction(-4), 5, 0, 5, 0, 1])
        and r5.A
        == Poly([Fraction(1, 5), Fraction(1, 5), Fraction(2, 5), 0, Fraction(1, 10)])
        and r5.z == -1
        and r5.u_roots == (),
        "g, f, A, z and rational-root scan for (5, 2, 5)",
    )

    # Septic golden instance (p=7, d=-2158, R=6*881^2), exact and numeric.
    r7 = reduce_radical(7, -2158, 4656966)
    g7 = [Fraction(0)] * 15
    g7[0], g7[7], g7[14] = Fraction(-2), Fraction(4316), Fraction(1)
    record(
        "septic-exact",
        r7.params.D == -2 and r7.g == Poly(g7) and r7.u == 4 and r7.z is None,
        "g, D, u = 4 and irrational z for (7, -2158, 4656966)",
    )
    res = branch_residuals(r7, bits)
    record(
        "septic-numeric-residual",
        res["max_residual"] < tol and res["branch_signs_consistent"],
        f"max residual {decimal_str(res['max_residual'])} < {decimal_str(tol)}",
    )

    # Construction roundtrip (p=7, D=-2, u=4).
    params, _ = construct_example(7, -2, 4)
    roundtrip = reduce_radical(7, params.d, params.R)
    record(
        "construction-roundtrip",
        params.d == -2158 and params.R == 4656966 and roundtrip.u == 4,
        "construct(7, -2, 4) gives d = -2158, R = 4656966 and reduce recovers u = 4",
    )

    # Cubic golden instance (p=3, d=-7, R=50): exact denesting (sqrt(2) - 1)^3.
    r3 = reduce_radical(3, -7, 50)
    cubic_ok = (
        r3.u == 2
        and r3.z == -1
        and r3.branch_values is not None
        and r3.branch_values[0] == QuadExt(-1, Fraction(1, 5), 50)
        and r3.branch_values[0] ** 3 == QuadExt(-7, 1, 50)
    )
    record(
        "cubic-exact-denesting",
        cubic_ok,
        "branch -1 + sqrt(2) cubes to -7 + sqrt(50), verified in Q(sqrt(50))",
    )

    # Classical square-root denestings.
    sq = euclid_denest(3, 5)
    record(
        "square-denesting",
        sq is not None and (sq.x1, sq.x2) == (Fraction(5, 2), Fraction(1, 2)) and sq.certify(3, 5),
        "sqrt(3 + sqrt(5)) = sqrt(5/2) + sqrt(1/2)",
    )
    fourth = euclid_biquadratic(7, 48)
    record(
        "fourth-denesting",
        fourth is not None
        and (fourth.inner, fourth.half_k) == (Fraction(1), Fraction(1, 2))
        and fourth.certify(7, 48),
        "(7 + sqrt(48))^(1/4) = sqrt(sqrt(1) + 1/2) + sqrt(sqrt(1) - 1/2)",
    )
    return checks


def cmd_selftest(args) -> int:
    checks = _selftest_checks(args.bits, args.tolerance_exp)
    ok = all(c["pass"] for c in checks)
    _emit({"checks": checks, "ok": ok})
    return 0 if ok else 1


_DISPATCH = {
    "reduce": cmd_reduce,
    "construct": cmd_construct,
    "euclid": cmd_euclid,
    "classify": cmd_classify,
    "coeffs": cmd_coeffs,
    "verify": cmd_verify,
    "selftest": cmd_selftest,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except (ReductionError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
