"""Command-line front end.

Exit codes: 0 success, 2 usage or parse error, 3 parameters outside the
covered range (``m = 0``, or no operator exists), 4 a verification mismatch.

Negative values must be attached to their flag, e.g. ``--lambda=-3/2``, or
argparse will read them as options.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional

from .diffops import compare_kkp, emit_operator, symbol_inverse
from .exact import GaussianRational, as_gaussian, parse_gaussian
from .fsystem import FParams, GeneratorTriple, ZeroMError, l_operators, m_coeffs
from .identities import (
    DEFAULT_MAX_ELL,
    DEFAULT_MUS,
    GEGENBAUER_CHECKS,
    check_operator_identities,
)
from .solver import (
    NotAdmissibleError,
    brute_force_sol,
    brute_force_xi,
    classify,
    closed_form_solution,
    duality_phi,
    natural_value,
    proportionality,
    solution_psi,
    xi_kernel,
)

EXIT_OK, EXIT_USAGE, EXIT_SCOPE, EXIT_MISMATCH = 0, 2, 3, 4

DEFAULT_GRID_LAMBDA = "-12:4,1/2,-3/2,2/3,1/2+1/3*i"
DEFAULT_GRID_A = "0:8"
DEFAULT_GRID_M = "1:5"


class UsageError(Exception):
    pass


# -- parsing -------------------------------------------------------------------

def _gaussian(text: str) -> GaussianRational:
    try:
        return parse_gaussian(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def parse_grid(text: str, integer: bool = False) -> list:
    """Comma-separated values and inclusive integer ranges ``lo:hi``."""
    out = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        if ":" in item:
            lo, hi = item.split(":", 1)
            try:
                lo, hi = int(lo), int(hi)
            except ValueError:
                raise UsageError(f"bad range {item!r}") from None
            out.extend(range(lo, hi + 1))
        elif integer:
            try:
                out.append(int(item))
            except ValueError:
                raise UsageError(f"not an integer: {item!r}") from None
        else:
            try:
                out.append(parse_gaussian(item))
            except ValueError as exc:
                raise UsageError(str(exc)) from None
    if not integer:
        out = [as_gaussian(x) for x in out]
    seen = []
    for x in out:
        if x not in seen:
            seen.append(x)
    return seen


def _sort_key(x: GaussianRational):
    return (x.re, x.im)


def _triple_json(t: Optional[GeneratorTriple]):
    if t is None:
        return None
    return {
        name: {
            "bound": g.bound,
            "terms": [[e, str(c)] for e, c in g.body.items()],
        }
        for name, g in (("g_lo", t.g_lo), ("g_mid", t.g_mid), ("g_hi", t.g_hi))
    }


def _emit(obj, fmt: str = "json") -> None:
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True, indent=2))
    else:
        for k in sorted(obj):
            print(f"{k}: {obj[k]}")


def _require(args, *names):
    for n in names:
        if getattr(args, n) is None:
            raise UsageError(f"--{n.replace('_', '-')} is required for {args.command}")


def _nu_from(args) -> GaussianRational:
    if args.nu is not None and args.a is not None and args.nu - args.lambda_ != args.a:
        raise UsageError("--nu and --a disagree")
    if args.nu is not None:
        return args.nu
    if args.a is not None:
        return args.lambda_ + args.a
    raise UsageError(f"--nu or --a is required for {args.command}")


# -- commands ------------------------------------------------------------------

def cmd_classify(args) -> int:
    _require(args, "lambda_", "m")
    nu = _nu_from(args)
    c = classify(args.lambda_, nu, args.m)
    report = {
        "lambda": str(args.lambda_),
        "nu": str(nu),
        "m": args.m,
        "dimension": c.dimension,
        "case": None if c.case_tag is None else c.case_tag[-1],
    }
    if args.format == "text":
        print(f"lambda={report['lambda']} nu={report['nu']} m={args.m} "
              f"dimension={c.dimension} case={report['case']} subcase={c.subcase}")
    else:
        _emit(report)
    return EXIT_OK


def solve_report(lam, a: int, m: int) -> dict:
    lam = as_gaussian(lam)
    if m > 0:
        basis = list(brute_force_xi(lam, a, m).basis)
    else:
        basis = list(brute_force_sol(lam, a, m))
    dim = classify(lam, lam + a, m).dimension
    closed = closed_form_solution(lam, a, m) if dim == 1 else None
    scalar = None
    match = len(basis) == dim
    if closed is not None and match:
        scalar = proportionality(basis[0], closed)
        match = scalar is not None
    return {
        "lambda": str(lam),
        "a": a,
        "m": m,
        "dimension": dim,
        "brute_force": [_triple_json(t) for t in basis],
        "closed_form": _triple_json(closed) if closed is not None else "not applicable",
        "scalar": None if scalar is None else str(scalar),
        "match": match,
    }


def cmd_solve(args) -> int:
    _require(args, "lambda_", "m")
    nu = _nu_from(args)
    a = natural_value(nu - args.lambda_)
    if a is None:
        raise UsageError("nu - lambda must be a natural number for solve")
    report = solve_report(args.lambda_, a, args.m)
    _emit(report, args.format)
    return EXIT_OK if report["match"] else EXIT_MISMATCH


def cmd_emit(args) -> int:
    _require(args, "lambda_", "m")
    nu = _nu_from(args)
    try:
        D = emit_operator(args.lambda_, nu, args.m)
    except NotAdmissibleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCOPE
    if args.format == "latex":
        print(D.to_latex())
    elif args.format == "text":
        print(D.to_text())
    else:
        print(json.dumps(D.to_json_obj(), sort_keys=True, indent=2))
    return EXIT_OK


def _fuzzed_operators(seed: int):
    rng = random.Random(seed)
    delta = rng.choice([x for x in range(-5, 6) if x])

    def ops(p, f0, f1, f2):
        L = list(l_operators(p, f0, f1, f2))
        L[4] = L[4] + f0.scale(delta)
        return tuple(L)

    return ops


def verify_point(point) -> dict:
    """All checks at one grid point: ``(lambda, a, m, fuzz_seed or None)``."""
    lam, a, m, fuzz = point
    lam = as_gaussian(lam)
    nu = lam + a
    dim = classify(lam, nu, m).dimension
    if fuzz is None:
        basis = brute_force_xi(lam, a, m).basis
    else:
        basis = xi_kernel(lam, a, m, _fuzzed_operators(fuzz))
    checks = {"dimension": len(basis) == dim}
    if dim == 1 and checks["dimension"]:
        closed = closed_form_solution(lam, a, m)
        checks["proportional"] = proportionality(basis[0], closed) is not None
        p = FParams.from_lambda_a(lam, a, m)
        psi = solution_psi(lam, a, m)
        checks["annihilated"] = all(M.is_zero() for M in m_coeffs(p, psi))
        q = FParams.from_lambda_a(lam, a, -m)
        dual = duality_phi(psi)
        checks["duality"] = (
            all(M.is_zero() for M in m_coeffs(q, dual))
            and len(brute_force_sol(lam, a, -m)) == 1
        )
        checks["operator"] = symbol_inverse(psi, m) == emit_operator(lam, nu, m)
    return {
        "lambda": str(lam),
        "a": a,
        "m": m,
        "dimension": dim,
        "checks": checks,
        "match": all(checks.values()),
        "_key": (m, a, _sort_key(lam)),
    }


def cmd_verify(args) -> int:
    lams = parse_grid(args.grid_lambda or DEFAULT_GRID_LAMBDA)
    a_values = parse_grid(args.grid_a or DEFAULT_GRID_A, integer=True)
    ms = parse_grid(args.grid_m or DEFAULT_GRID_M, integer=True)
    if any(m <= 0 for m in ms):
        raise UsageError("--grid-m takes positive values; negative m is covered by duality")
    if any(a < 0 for a in a_values):
        raise UsageError("--grid-a takes nonnegative values")
    fuzz = None
    if args.fuzz:
        fuzz = int(os.environ.get("SBO_SEED", "0"))
    points = [(lam, a, m, fuzz) for m in ms for a in a_values for lam in lams]
    if args.jobs and args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as ex:
            rows = list(ex.map(verify_point, points, chunksize=8))
    else:
        rows = [verify_point(p) for p in points]
    rows.sort(key=lambda r: r.pop("_key"))
    failures = [r for r in rows if not r["match"]]
    if args.format == "json":
        print(json.dumps({"points": rows, "mismatches": len(failures)}, sort_keys=True, indent=2))
    else:
        for r in rows:
            flags = " ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in sorted(r["checks"].items()))
            print(f"lambda={r['lambda']:>10} a={r['a']} m={r['m']} dim={r['dimension']} {flags}")
        print(f"{len(rows)} points, {len(failures)} mismatches")
    return EXIT_MISMATCH if failures else EXIT_OK


def cmd_suite(args) -> int:
    max_ell = args.max_ell if args.max_ell is not None else DEFAULT_MAX_ELL
    op_ell = args.max_op_ell if args.max_op_ell is not None else 8
    results = {}
    for name, check in GEGENBAUER_CHECKS.items():
        results[name] = check(DEFAULT_MUS, max_ell)
    results["operator_identities"] = check_operator_identities(DEFAULT_MUS, op_ell)
    total = sum(len(v) for v in results.values())
    if args.format == "json":
        print(json.dumps({"failures": results, "total_failures": total}, sort_keys=True, indent=2))
    else:
        for name, bad in results.items():
            print(f"{name}: {'ok' if not bad else f'{len(bad)} failures'}")
            for line in bad:
                print(f"  {line}")
    return EXIT_MISMATCH if total else EXIT_OK


def cmd_compare_kkp(args) -> int:
    _require(args, "lambda_")
    nu = _nu_from(args)
    a = natural_value(nu - args.lambda_)
    if a is None:
        raise UsageError("nu - lambda must be a natural number for compare-kkp")
    max_degree = args.max_degree if args.max_degree is not None else 4
    ok, witness = compare_kkp(args.lambda_, nu, max_degree)
    report = {
        "lambda": str(args.lambda_),
        "nu": str(nu),
        "max_degree": max_degree,
        "K": 1 if a == 0 else 2,
        "agree": ok,
        "witness": None if witness is None else repr(witness),
    }
    _emit(report, args.format)
    return EXIT_OK if ok else EXIT_MISMATCH


COMMANDS = {
    "classify": cmd_classify,
    "solve": cmd_solve,
    "emit": cmd_emit,
    "verify": cmd_verify,
    "suite": cmd_suite,
    "compare-kkp": cmd_compare_kkp,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sbocalc",
        description="Exact construction and verification of vector-to-line "
        "differential symmetry breaking operators.",
    )
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--lambda", dest="lambda_", type=_gaussian)
    parser.add_argument("--nu", type=_gaussian)
    parser.add_argument("--m", type=int)
    parser.add_argument("--a", type=int)
    parser.add_argument("--format", choices=["json", "latex", "text"], default="json")
    parser.add_argument("--max-degree", type=int)
    parser.add_argument("--max-ell", type=int, help="degree range of the identity suite")
    parser.add_argument("--max-op-ell", type=int, help="order range of the operator identities")
    parser.add_argument("--grid-lambda")
    parser.add_argument("--grid-a")
    parser.add_argument("--grid-m")
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--fuzz", action="store_true", help=argparse.SUPPRESS)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ZeroMError:
        print("error: m = 0 is out of scope (it reduces to the known scalar case "
              "via the branching rule)", file=sys.stderr)
        return EXIT_SCOPE


if __name__ == "__main__":
    sys.exit(main())
