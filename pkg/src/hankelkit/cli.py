"""Command-line entry point: ``hankelkit <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 data error (singular minor, too few terms, unavailable sequence).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import catalog, oeis
from .errors import DataError, HankelKitError, InsufficientTerms, NetworkError, NotFound, UsageError
from .hankel import hankel_transform, is_regular, ldl_decompose
from .jfraction import JFraction, extract_jfraction, hankel_from_lambdas, moments_from_jfraction
from .orthopoly import (
    functional_P_squared,
    hankel_via_coefficients,
    polys_from_determinants,
    polys_from_ldl,
    polys_from_recurrence,
)
from .riordan import Kind, RiordanArray, parse_series, riordan_entries, riordan_inverse
from .series import Sequence, parse_terms

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_DATA = 0, 1, 2, 3
DEFAULT_SEQ_DEPTH = 10


def _s(v) -> str:
    return str(Fraction(v))


def _strs(values) -> list:
    return [_s(v) for v in values]


@dataclass
class AnalysisReport:
    input: list
    n: int
    regularity: dict
    hankel: dict = field(default_factory=dict)
    jfraction: Optional[dict] = None
    d: Optional[list] = None
    coeff_rows: Optional[list] = None
    agreement: dict = field(default_factory=dict)

    @property
    def regular(self) -> bool:
        return self.regularity["first_zero"] is None or self.regularity["first_zero"] > self.n

    def to_json(self) -> dict:
        return {
            "input": _strs(self.input),
            "n": self.n,
            "regularity": self.regularity,
            "hankel": {k: (None if v is None else _strs(v)) for k, v in self.hankel.items()},
            "jfraction": None if self.jfraction is None else {k: _strs(v) for k, v in self.jfraction.items()},
            "d": None if self.d is None else _strs(self.d),
            "coeff_rows": None if self.coeff_rows is None else [_strs(r) for r in self.coeff_rows],
            "agreement": self.agreement,
        }


def analyze(s: Sequence, n: Optional[int] = None) -> AnalysisReport:
    """Run every route on the first 2n+1 terms and cross-check them."""
    n = max_depth(s) if n is None else n
    if len(s) < 2 * n + 1:
        raise _too_few(n, len(s))
    s = s[: 2 * n + 1]
    reg = is_regular(s)
    det = hankel_transform(s)
    report = AnalysisReport(
        input=list(s.terms),
        n=n,
        regularity={
            "checked_through": reg.checked_through,
            "regular_through": reg.regular_through,
            "first_zero": reg.first_zero,
        },
        hankel={"det": det, "lambda_product": None, "coefficient_formula": None},
    )
    if not reg.regular:
        return report
    j = extract_jfraction(s)
    lam_h = hankel_from_lambdas(j, n)
    rec = polys_from_recurrence(j, n)
    dets = polys_from_determinants(s, n)
    ldl_arr = polys_from_ldl(s, n)
    coeff_h = hankel_via_coefficients(s, ldl_arr, n)
    d = list(ldl_decompose(s, n).d)
    report.hankel.update(lambda_product=lam_h, coefficient_formula=coeff_h)
    report.jfraction = {"alpha": list(j.alpha), "lambda": list(j.lambdas)}
    report.d = d
    report.coeff_rows = [list(r) for r in ldl_arr.rows]
    report.agreement = {
        "det_vs_lambda_product": det == lam_h,
        "det_vs_coefficient_formula": det == coeff_h,
        "coefficient_routes": rec == dets == ldl_arr,
        "d_vs_functional": d == [functional_P_squared(s, ldl_arr, k) for k in range(n + 1)],
        "moments_round_trip": moments_from_jfraction(j, 2 * n) == s,
    }
    return report


def _too_few(n, have):
    return InsufficientTerms(f"depth {n} needs {2 * n + 1} terms, got {have}")


def max_depth(s: Sequence) -> int:
    return (len(s) - 1) // 2


# ---------------------------------------------------------------- input


def _add_input_args(p: argparse.ArgumentParser):
    p.add_argument("source", nargs="?", help="file of terms, '-' for stdin, or the terms themselves")
    p.add_argument("--terms", help="comma/space separated terms, e.g. '1,1,2,5,14'")
    p.add_argument("--oeis", metavar="A######", help="take terms from an OEIS b-file")
    p.add_argument("--seq", choices=sorted(catalog.CATALOG), help="built-in example sequence")
    p.add_argument("--count", type=int, help="number of terms to take (default: 2n+1 for --seq)")
    p.add_argument("--offline", action="store_true", help="never use the network for --oeis")
    p.add_argument("--cache-dir", help="OEIS cache directory (default $OEIS_CACHE_DIR)")


def _read_sequence(args, stdin) -> Sequence:
    chosen = [x for x in (args.source, args.terms, args.oeis, args.seq) if x is not None]
    if len(chosen) != 1:
        raise UsageError("give exactly one of: source, --terms, --oeis, --seq")
    n = getattr(args, "n", None)
    if args.seq is not None:
        count = args.count or 2 * (DEFAULT_SEQ_DEPTH if n is None else n) + 1
        return catalog.generate(args.seq, count - 1)
    if args.oeis is not None:
        return oeis.fetch(args.oeis, args.count, offline=args.offline, cache_dir=args.cache_dir)
    if args.terms is not None:
        s = parse_terms(args.terms)
    elif args.source == "-":
        s = parse_terms(stdin.read())
    elif os.path.isfile(args.source):
        with open(args.source, encoding="utf-8") as fh:
            s = parse_terms(fh.read())
    else:
        s = parse_terms(args.source)
    return s[: args.count] if args.count else s


def _parse_list(text: Optional[str]) -> list:
    if not text or not text.strip():
        return []
    return list(parse_terms(text).terms)


# ---------------------------------------------------------------- commands


class _Out:
    def __init__(self, stream, as_json: bool):
        self.stream = stream
        self.as_json = as_json

    def line(self, text=""):
        print(text, file=self.stream)

    def json(self, obj):
        print(json.dumps(obj, indent=2), file=self.stream)


def cmd_hankel(args, out, err, stdin):
    s = _read_sequence(args, stdin)
    h = hankel_transform(s)
    if args.n is not None:
        if args.n > len(h) - 1:
            raise _too_few(args.n, len(s))
        h = h[: args.n + 1]
    zero = next((k for k, v in enumerate(h) if v == 0), None)
    if out.as_json:
        out.json({"input": _strs(s), "hankel": _strs(h), "first_zero": zero})
    else:
        for v in h:
            out.line(_s(v))
    if zero is not None:
        print(f"note: h_{zero} = 0, the sequence is not regular", file=err)
    return EXIT_OK


def cmd_ldl(args, out, err, stdin):
    s = _read_sequence(args, stdin)
    n = max_depth(s) if args.n is None else args.n
    dec = ldl_decompose(s, n)
    if out.as_json:
        obj = {"input": _strs(s), "d": _strs(dec.d)}
        if args.show_L:
            obj["L"] = [_strs(r) for r in dec.L]
        out.json(obj)
    else:
        out.line("d: " + " ".join(_strs(dec.d)))
        if args.show_L:
            out.line("L:")
            for r in dec.L:
                out.line(" ".join(_strs(r)))
    return EXIT_OK


def cmd_jfrac(args, out, err, stdin):
    if args.action == "extract":
        s = _read_sequence(args, stdin)
        j = extract_jfraction(s)
        if out.as_json:
            out.json({"alpha": _strs(j.alpha), "lambda": _strs(j.lambdas), "mu0": _s(j.mu0)})
        else:
            out.line("alpha: " + " ".join(_strs(j.alpha)))
            out.line("lambda: " + " ".join(_strs(j.lambdas)))
        return EXIT_OK
    try:
        j = JFraction(tuple(_parse_list(args.alpha)), tuple(_parse_list(args.lambdas)), Fraction(args.mu0))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    mu = moments_from_jfraction(j, args.n)
    if out.as_json:
        out.json({"moments": _strs(mu)})
    else:
        for v in mu:
            out.line(_s(v))
    return EXIT_OK


def _route_array(route, s, n):
    if route == "rec":
        return polys_from_recurrence(extract_jfraction(s[: 2 * n + 1]), n)
    if route == "det":
        return polys_from_determinants(s, n)
    return polys_from_ldl(s, n)


def cmd_orthopoly(args, out, err, stdin):
    s = _read_sequence(args, stdin)
    n = max_depth(s) if args.n is None else args.n
    A = _route_array(args.route, s, n)
    if out.as_json:
        out.json({"route": args.route, "rows": [_strs(r) for r in A.rows]})
    else:
        for r in A.rows:
            out.line(" ".join(_strs(r)))
    return EXIT_OK


def cmd_verify_proposition(args, out, err, stdin):
    s = _read_sequence(args, stdin)
    n = max_depth(s) if args.n is None else args.n
    if len(s) < 2 * n + 1:
        raise _too_few(n, len(s))
    s = s[: 2 * n + 1]
    det = hankel_transform(s)
    lam = hankel_from_lambdas(extract_jfraction(s), n)
    coeff = hankel_via_coefficients(s, polys_from_determinants(s, n), n)
    ok = det == lam == coeff
    if out.as_json:
        out.json({"det": _strs(det), "lambda_product": _strs(lam), "coefficient_formula": _strs(coeff), "pass": ok})
    else:
        out.line(f"{'n':>3}  {'determinant':>20}  {'lambda product':>20}  {'coefficient formula':>20}")
        for k in range(n + 1):
            out.line(f"{k:>3}  {_s(det[k]):>20}  {_s(lam[k]):>20}  {_s(coeff[k]):>20}")
        out.line("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_riordan(args, out, err, stdin):
    order = args.n
    g = parse_series(args.g, order)
    f = parse_series(args.f, order)
    r = RiordanArray(g, f, Kind.EXPONENTIAL if args.exp else Kind.ORDINARY)
    if args.inverse:
        r = riordan_inverse(r, order)
    M = riordan_entries(r, order)
    rows = [M[i][: i + 1] for i in range(order + 1)]
    if out.as_json:
        out.json({"kind": r.kind.value, "rows": [_strs(row) for row in rows]})
    else:
        for row in rows:
            out.line(" ".join(_strs(row)))
    return EXIT_OK


def cmd_verify(args, out, err, stdin):
    name = catalog.BY_EXAMPLE[args.example]
    checks = [catalog.verify_identity(name, k) for k in range(args.k + 1)]
    ok = all(c.passed for c in checks)
    triangle_ok = None
    if args.example == 4:
        triangle_ok = all(sum(r) == 1 for r in catalog.example4_triangle(args.k))
        ok = ok and triangle_ok
    if out.as_json:
        out.json(
            {
                "example": args.example,
                "sequence": name,
                "checks": [
                    {"k": c.k, "lhs": _s(c.lhs), "expected": _s(c.expected), "pass": c.passed, "note": c.note}
                    for c in checks
                ],
                "triangle_rows_sum_to_one": triangle_ok,
                "pass": ok,
            }
        )
    else:
        out.line(f"example {args.example}: {catalog.CATALOG[name].title} ({catalog.CATALOG[name].oeis_id})")
        out.line(f"{'k':>3}  {'lhs':>24}  {'expected':>24}  result")
        for c in checks:
            out.line(f"{c.k:>3}  {_s(c.lhs):>24}  {_s(c.expected):>24}  {'PASS' if c.passed else 'FAIL'}")
        if triangle_ok is not None:
            out.line(f"triangle rows sum to 1: {'PASS' if triangle_ok else 'FAIL'}")
        out.line("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_analyze(args, out, err, stdin):
    s = _read_sequence(args, stdin)
    report = analyze(s, args.n)
    if out.as_json:
        out.json(report.to_json())
    else:
        out.line("input: " + ", ".join(_strs(report.input)))
        reg = report.regularity
        out.line(f"regular through n={reg['regular_through']} (checked through {reg['checked_through']})")
        for key, vals in report.hankel.items():
            if vals is not None:
                out.line(f"hankel[{key}]: " + " ".join(_strs(vals)))
        if report.jfraction is not None:
            out.line("alpha: " + " ".join(_strs(report.jfraction["alpha"])))
            out.line("lambda: " + " ".join(_strs(report.jfraction["lambda"])))
            out.line("d: " + " ".join(_strs(report.d)))
            for key, flag in report.agreement.items():
                out.line(f"{key}: {'yes' if flag else 'NO'}")
    if not report.regular:
        print(f"error: h_{report.regularity['first_zero']} = 0, the sequence is not regular", file=err)
        return EXIT_DATA
    return EXIT_OK if all(report.agreement.values()) else EXIT_VERIFY


def cmd_fetch(args, out, err, stdin):
    bfile = oeis.fetch_bfile(args.anumber, offline=args.offline, cache_dir=args.cache_dir)
    values = bfile.values()[: args.max_terms] if args.max_terms else bfile.values()
    if out.as_json:
        out.json({"anumber": bfile.anumber, "offset": bfile.offset, "terms": [str(v) for v in values]})
    else:
        if bfile.offset != 0:
            print(f"note: OEIS offset {bfile.offset}, re-indexed from 0", file=err)
        for v in values:
            out.line(str(v))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured output")

    parser = argparse.ArgumentParser(prog="hankelkit", description="Exact Hankel transforms and orthogonal polynomials")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hankel", parents=[common], help="Hankel transform h_0..h_N")
    _add_input_args(p)
    p.add_argument("-n", type=int, help="last index (default: all the terms allow)")
    p.set_defaults(func=cmd_hankel)

    p = sub.add_parser("ldl", parents=[common], help="H = L D L^T")
    _add_input_args(p)
    p.add_argument("-n", type=int)
    p.add_argument("--show-L", action="store_true", help="also print L row by row")
    p.set_defaults(func=cmd_ldl)

    p = sub.add_parser("jfrac", help="J-fraction coefficients")
    jsub = p.add_subparsers(dest="action", required=True)
    pe = jsub.add_parser("extract", parents=[common])
    _add_input_args(pe)
    pe.add_argument("-n", type=int, help=argparse.SUPPRESS)
    pe.set_defaults(func=cmd_jfrac)
    pm = jsub.add_parser("moments", parents=[common])
    pm.add_argument("--alpha", default="")
    pm.add_argument("--lambda", dest="lambdas", default="")
    pm.add_argument("--mu0", default="1")
    pm.add_argument("-n", type=int, required=True)
    pm.set_defaults(func=cmd_jfrac)

    p = sub.add_parser("orthopoly", parents=[common], help="monic orthogonal polynomial coefficient rows")
    _add_input_args(p)
    p.add_argument("-n", type=int)
    p.add_argument("--route", choices=["rec", "det", "ldl"], default="ldl")
    p.set_defaults(func=cmd_orthopoly)

    p = sub.add_parser("verify-proposition", parents=[common], help="compare the three Hankel routes")
    _add_input_args(p)
    p.add_argument("-n", type=int)
    p.set_defaults(func=cmd_verify_proposition)

    p = sub.add_parser("riordan", help="Riordan array entries")
    rsub = p.add_subparsers(dest="action", required=True)
    pr = rsub.add_parser("entries", parents=[common])
    pr.add_argument("--g", required=True, help="series expression, e.g. '1/(1-x)' or 'E'")
    pr.add_argument("--f", required=True, help="series expression, e.g. 'x/(1-x)'")
    pr.add_argument("--exp", action="store_true", help="exponential Riordan array")
    pr.add_argument("--inverse", action="store_true", help="materialize the group inverse instead")
    pr.add_argument("-n", type=int, default=8)
    pr.set_defaults(func=cmd_riordan)

    p = sub.add_parser("verify", parents=[common], help="check an example's displayed identities")
    p.add_argument("--example", type=int, choices=[1, 2, 3, 4, 5], required=True)
    p.add_argument("-k", type=int, default=10)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("analyze", parents=[common], help="full cross-checked report")
    _add_input_args(p)
    p.add_argument("-n", type=int)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("fetch", parents=[common], help="fetch an OEIS b-file (cached)")
    p.add_argument("anumber")
    p.add_argument("--max-terms", type=int)
    p.add_argument("--offline", action="store_true")
    p.add_argument("--cache-dir")
    p.set_defaults(func=cmd_fetch)
    return parser


def run(argv=None, stdout=None, stderr=None, stdin=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = _Out(stdout, getattr(args, "json", False))
    try:
        return args.func(args, out, stderr, stdin)
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    except (DataError, NetworkError, NotFound) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_DATA
    except HankelKitError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_DATA


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
