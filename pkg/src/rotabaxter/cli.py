"""Command-line front end: every command prints one JSON report on stdout.

Exit status 0 means every check passed, 1 means a check found a violation and
2 means the input could not be parsed or the object could not be built.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .averaging import (AveragingSpec, build_averaging, check_averaging, check_idempotent,
                        enumerate_idempotents, matrix_to_averaging)
from .decomp import (DecompositionSpec, boundary_line_check, check_decomposition,
                     empirical_slopes, splitting_rbo)
from .errors import RotaBaxterError
from .exactfield import parse_field, to_str
from .monoalg import Monomial
from .rbo import coeffs
from .rbo.families import (R1_FAMILIES, Fibonacci, build_rbo, family_from_json,
                           family_to_json, negate_rule, r1_coeff, r1_prefix)
from .rbo.sseq import s_closed_form, s_identities_check, s_recurrence
from .rbo.verify import rb_check, splitting_criterion_check, table_rows

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _load_json(text: str, flag: str):
    if text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{flag}: invalid JSON ({exc})") from None


def _require(args, name: str, flag: str):
    value = getattr(args, name)
    if value is None:
        raise InputError(f"{flag} is required for {args.command}")
    return value


# --- commands -------------------------------------------------------------------

def cmd_verify_rb(args) -> tuple[dict, int]:
    family = family_from_json(_load_json(_require(args, "family", "--family"), "--family"), args.theta)
    R = build_rbo(family)
    lam = R.weight if args.weight is None else parse_field(args.weight)
    if lam is None:
        raise InputError("the family declares no weight; pass --weight")
    report = rb_check(R, lam, args.degree, args.workers)
    out = {"command": "verify-rb", "family": family_to_json(family), "weight": to_str(lam),
           "N": args.degree, "report": report.to_json()}
    return out, EXIT_OK if report.passed else EXIT_VIOLATION


def cmd_verify_averaging(args) -> tuple[dict, int]:
    spec = AveragingSpec.from_json(_load_json(_require(args, "spec", "--spec"), "--spec"))
    T = build_averaging(spec)
    reports = {
        "averaging": check_averaging(T, args.degree, args.workers),
        "idempotent": check_idempotent(T, args.degree),
        "negation_rb": rb_check(negate_rule(T), 1, args.degree, args.workers),
        "negation_splitting": splitting_criterion_check(negate_rule(T), 1, args.degree),
    }
    ok = all(r.passed for r in reports.values())
    out = {"command": "verify-averaging", "spec": spec.to_json(), "N": args.degree,
           "reports": {k: r.to_json() for k, r in reports.items()}}
    return out, EXIT_OK if ok else EXIT_VIOLATION


def cmd_classify(args) -> tuple[dict, int]:
    if args.bound is None or args.bound < 0:
        raise InputError("--bound must be a nonnegative integer")
    parts = [p.strip() for p in args.scalars.split(",")]
    if len(parts) != 2:
        raise InputError("--scalars takes two values, alpha,beta")
    scalars = tuple(parse_field(p) for p in parts)
    entries, ok = [], True
    for M in enumerate_idempotents(args.bound):
        spec = matrix_to_averaging(M, scalars)
        entry = {"matrix": [[M.a, M.b], [M.c, M.d]], "spec": spec.to_json()}
        if args.verify:
            report = check_averaging(build_averaging(spec), args.degree, args.workers)
            entry["check_averaging"] = {"passed": report.passed, "checked_pairs": report.checked_pairs,
                                        "violation_count": len(report.violations)}
            ok = ok and report.passed
        entries.append(entry)
    out = {"command": "classify", "bound": args.bound, "scalars": [to_str(s) for s in scalars],
           "count": len(entries), "entries": entries}
    if args.verify:
        out["N"] = args.degree
    return out, EXIT_OK if ok else EXIT_VIOLATION


def _pipeline_table(family, K: int, M: int) -> dict:
    row = coeffs.extend_row(r1_prefix(family), K + M)
    return coeffs.r1_extend(row, row[0], K, M), row


def _cross_check(family, K: int, M: int) -> dict:
    formula = r1_coeff(family)
    pipeline, row = _pipeline_table(family, K, M)
    mismatches = []
    for k in range(1, K + 1):
        for m in range(M + 1):
            values = {"formula": formula(k, m), "recurrence": pipeline[(k, m)],
                      "binomial_sum": coeffs.alpha_sum_formula(row, k - 1, m)}
            if isinstance(family, Fibonacci) and k == 1:
                values["fibonacci_row"] = coeffs.fibonacci_row_value(family.a, family.b, m)
            if len(set(values.values())) > 1:
                mismatches.append({"k": k, "m": m, **{n: to_str(v) for n, v in values.items()}})
    routes = ["formula", "recurrence", "binomial_sum"] + (["fibonacci_row"] if isinstance(family, Fibonacci) else [])
    return {"routes": routes, "entries": K * (M + 1), "passed": not mismatches, "mismatches": mismatches}


def cmd_table(args) -> tuple[dict, int]:
    family = family_from_json(_load_json(_require(args, "family", "--family"), "--family"), args.theta)
    if not isinstance(family, R1_FAMILIES):
        raise InputError(f"table supports the r = 1 families, not {family.name}")
    if args.K < 0 or args.M < 0:
        raise InputError("-K and -M must be nonnegative")
    R = build_rbo(family)
    monos = [Monomial(k, m) for k in range(args.K + 1) for m in range(args.M + 1)]
    out = {"command": "table", "family": family.name, "params": family.params(),
           "weight": to_str(R.weight), "theta": to_str(family.theta), "K": args.K, "M": args.M,
           "table": table_rows(R, monos)}
    code = EXIT_OK
    if args.cross_check:
        out["cross_check"] = _cross_check(family, args.K, args.M)
        code = EXIT_OK if out["cross_check"]["passed"] else EXIT_VIOLATION
    return out, code


def cmd_decomp(args) -> tuple[dict, int]:
    spec = DecompositionSpec.from_json(_load_json(_require(args, "spec", "--spec"), "--spec"))
    lam = parse_field(args.weight) if args.weight is not None else parse_field(1)
    N = args.degree
    closure = check_decomposition(spec, N, args.workers)
    R = splitting_rbo(spec, lam)
    reports = {"closure": closure, "splitting_rb": rb_check(R, lam, N, args.workers),
               "splitting_criterion": splitting_criterion_check(R, lam, N)}
    if spec.case in ("IV", "V"):
        reports["boundary_line"] = boundary_line_check(spec, N)
    out = {"command": "decomp", "spec": spec.to_json(), "N": N, "lambda": to_str(lam),
           "reports": {k: r.to_json() for k, r in reports.items()},
           "witnesses": [[str(m) for m in w] for w in closure.failing_inputs()]}
    if spec.case in ("IV", "V", "VI"):
        a_hat, b_hat = empirical_slopes(spec, N)
        out["slopes"] = {"alpha_hat": to_str(a_hat), "beta_hat": to_str(b_hat),
                         "product": to_str(a_hat * b_hat)}
    ok = all(r.passed for r in reports.values())
    return out, EXIT_OK if ok else EXIT_VIOLATION


def cmd_s_seq(args) -> tuple[dict, int]:
    s2 = parse_field(_require(args, "s2", "--s2"))
    M = args.M
    if M < 0:
        raise InputError("-M must be nonnegative")
    rec = s_recurrence(s2, M)
    closed = s_closed_form(s2, M)
    out = {"command": "s-seq", "s2": to_str(s2), "M": M,
           "recurrence": [to_str(v) for v in rec], "closed_form": [to_str(v) for v in closed],
           "match": rec == closed}
    ok = rec == closed
    if args.identities:
        report = s_identities_check(rec, M, s2)
        out["identities"] = report.to_json()
        ok = ok and report.passed
    return out, EXIT_OK if ok else EXIT_VIOLATION


COMMANDS = {
    "verify-rb": cmd_verify_rb,
    "verify-averaging": cmd_verify_averaging,
    "classify": cmd_classify,
    "table": cmd_table,
    "decomp": cmd_decomp,
    "s-seq": cmd_s_seq,
}


# --- argument parsing -------------------------------------------------------------

def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rotabaxter", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-N", "--degree", type=_nonneg, default=10, help="total degree bound (default 10)")
    common.add_argument("--workers", type=_positive, default=1, help="checker threads (default 1)")
    common.add_argument("--out", help="write the JSON report to this file instead of stdout")

    fam = argparse.ArgumentParser(add_help=False)
    fam.add_argument("--family", help='family JSON, or @path to a JSON file')
    fam.add_argument("--theta", help="R(1) for families that take it: 0 or -1")

    p = sub.add_parser("verify-rb", parents=[common, fam], help="run rb_check on a family")
    p.add_argument("--weight", help="weight to check at (default: the family's own)")

    p = sub.add_parser("verify-averaging", parents=[common], help="check an averaging spec")
    p.add_argument("--spec", help='AveragingSpec JSON, e.g. {"case":"Case2","r":1,"alpha":"3"}')

    p = sub.add_parser("classify", parents=[common], help="list idempotent exponent matrices")
    p.add_argument("--bound", type=int, help="largest matrix entry")
    p.add_argument("--scalars", default="1,1", help="alpha,beta for Case2/Case5 (default 1,1)")
    p.add_argument("--verify", action="store_true", help="also run check_averaging at -N")

    p = sub.add_parser("table", parents=[common, fam], help="coefficient table of an r = 1 family")
    p.add_argument("-K", type=int, default=3, help="largest x-exponent (default 3)")
    p.add_argument("-M", type=int, default=6, help="largest y-exponent (default 6)")
    p.add_argument("--cross-check", action="store_true", help="recompute by every available route")

    p = sub.add_parser("decomp", parents=[common], help="check a monomial decomposition")
    p.add_argument("--spec", help='decomposition JSON, e.g. {"case":"IV","slope":"3/2"}')
    p.add_argument("--weight", help="lambda of the splitting operator (default 1)")

    p = sub.add_parser("s-seq", parents=[common], help="s-sequence by recurrence and closed form")
    p.add_argument("--s2", help="the free value s_2")
    p.add_argument("-M", type=int, default=20, help="last index (default 20)")
    p.add_argument("--identities", action="store_true", help="also check the product identities")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out, code = COMMANDS[args.command](args)
    except (InputError, RotaBaxterError, ValueError, ArithmeticError, KeyError, TypeError, OSError) as exc:
        msg = str(exc) or type(exc).__name__
        print(f"rotabaxter {args.command}: {type(exc).__name__}: {msg}", file=sys.stderr)
        return EXIT_INPUT
    text = json.dumps(out, sort_keys=True, indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
