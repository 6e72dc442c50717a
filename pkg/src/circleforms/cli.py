"""Command-line front end.

Subcommands: verify-form, equiv, verify-certificate, classify, oracle,
case12, quotient, selftest.  Exit codes are a stable contract: 0 for
success or a positive verdict, 1 for a verified negative (inequivalent,
check failed, certificate invalid), 2 for usage errors.  Usage errors are
caught before any kernel computation runs.

Polynomials are entered as ascending comma-separated rational coefficient
lists ("2,8" is 2 + 8T).  JSON schemas are documented in the README; all
JSON output is canonical (sorted keys, compact separators), so re-serializing
a parsed document reproduces it byte for byte.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import acceptance
from .equivalence import decide_equiv, verify_certificate
from .forms import (
    CASE12_WEIGHTS,
    FormSpec,
    case12_conjugator,
    case12_involution,
    linear_circle_form,
    make_circle_form,
    make_twist,
    verify_case12_bundle,
    verify_case12_linearization,
    verify_cocycle,
    verify_splitting,
)
from .gaussian import format_rational
from .laurent import LaurentPoly
from .matrices import StructuredMatrix
from .oracle import search_conjugator
from .polymaps import is_involution, o2_relation_check, weight_check
from .quotient import induced_images, make_invariants, verify_relation
from . import equivalence


class UsageError(Exception):
    """Invalid input; reported on stderr with exit status 2."""


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


_GAUSSIAN_TOKEN = re.compile(r"^[0-9+/\- ]*i[0-9+/\- ]*$")


def parse_rational_token(token: str) -> Fraction:
    token = token.strip()
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        if _GAUSSIAN_TOKEN.match(token):
            raise UsageError(f"non-real coefficient not allowed here: {token!r}")
        raise UsageError(f"cannot parse rational coefficient: {token!r}")


def parse_poly(text: str) -> LaurentPoly:
    """Ascending comma-separated rational coefficients -> real polynomial."""
    if text is None or not text.strip():
        raise UsageError("empty coefficient list")
    coeffs = [parse_rational_token(tok) for tok in text.split(",")]
    return LaurentPoly.from_coeffs(coeffs)


def parse_r_grid(text: str) -> list[Fraction]:
    grid = [parse_rational_token(tok) for tok in text.split(",")]
    if not grid:
        raise UsageError("empty rescaling grid")
    if any(not r for r in grid):
        raise UsageError("rescaling grid entries must be nonzero")
    return grid


def _require_m(m: Optional[int]) -> int:
    if m is None or m < 1:
        raise UsageError("--m must be a positive integer")
    return m


def _emit(args, human_lines: Sequence[str], payload) -> None:
    if getattr(args, "json", False):
        print(canonical_json(payload))
    else:
        for line in human_lines:
            print(line)


def cmd_verify_form(args) -> int:
    m = _require_m(args.m)
    h = parse_poly(args.h)
    spec = FormSpec(m, h)
    twist = make_twist(spec)
    mu = make_circle_form(spec)
    checks = {
        "det_is_one": twist.det() == LaurentPoly.one(),
        "cocycle": verify_cocycle(twist),
        "splitting": verify_splitting(spec),
        "involution": is_involution(mu),
        "weight_grading": weight_check(mu.map, spec.weights(), -1),
    }
    ok = all(checks.values())
    lines = [f"{'ok' if v else 'FAIL'}  {k}" for k, v in checks.items()]
    lines.append(f"verdict: {'real circle form verified' if ok else 'verification FAILED'}")
    _emit(args, lines, {"m": m, "h": h.to_json(), "checks": checks, "ok": ok})
    return 0 if ok else 1


def cmd_equiv(args) -> int:
    m = _require_m(args.m)
    h = parse_poly(args.h)
    h2 = parse_poly(args.hp)
    result = decide_equiv(h, h2, m)
    payload = result.to_json()
    lines = []
    if result.equivalent:
        if result.rational_witness is not None:
            lines.append(f"equivalent, rational witness r = {format_rational(result.rational_witness)}")
        else:
            lines.append("equivalent over the reals, no rational witness")
    else:
        lines.append("inequivalent")
    if args.out:
        if result.certificate is not None:
            r, conj = result.certificate
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(canonical_json({"r": format_rational(r), "N": conj.to_json()}))
            lines.append(f"certificate written to {args.out}")
        else:
            lines.append("no certificate to write (no rational witness)")
    _emit(args, lines, payload)
    return 0 if result.equivalent else 1


def cmd_verify_certificate(args) -> int:
    m = _require_m(args.m)
    h = parse_poly(args.h)
    h2 = parse_poly(args.hp)
    if not args.file:
        raise UsageError("--file with a certificate JSON document is required")
    try:
        with open(args.file, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        r = Fraction(doc["r"])
        conj = StructuredMatrix.from_json(doc["N"])
    except (OSError, KeyError, ValueError, TypeError) as exc:
        raise UsageError(f"cannot load certificate: {exc}")
    ok = verify_certificate(h, h2, m, r, conj)
    _emit(args, [f"certificate {'valid' if ok else 'INVALID'}"],
          {"valid": ok, "r": format_rational(r)})
    return 0 if ok else 1


def cmd_classify(args) -> int:
    m = _require_m(args.m)
    if not args.file:
        raise UsageError("--file with a forms JSON document is required")
    try:
        with open(args.file, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        raw_forms = doc["forms"] if isinstance(doc, dict) else doc
        forms = [LaurentPoly.from_coeffs([Fraction(c) for c in coeffs])
                 for coeffs in raw_forms]
    except (OSError, KeyError, ValueError, TypeError) as exc:
        raise UsageError(f"cannot load forms: {exc}")
    classes = equivalence.classify(forms, m)
    lines = [f"{len(forms)} forms fall into {len(classes)} classes"]
    for idx, members in enumerate(classes):
        shown = ", ".join(str(forms[i]) for i in members)
        lines.append(f"  class {idx}: indices {members}  ({shown})")
    _emit(args, lines, {"m": m, "classes": classes, "count": len(classes)})
    return 0


def cmd_oracle(args) -> int:
    m = _require_m(args.m)
    h = parse_poly(args.h)
    h2 = parse_poly(args.hp)
    if args.deg is None or args.deg < 0:
        raise UsageError("--deg must be a nonnegative integer")
    grid = parse_r_grid(args.r_grid) if args.r_grid else [Fraction(1), Fraction(-1)]
    found = search_conjugator(h, h2, m, args.deg, grid)
    payload = [{"r": format_rational(r), "N": conj.to_json()} for r, conj in found]
    lines = [f"{len(found)} verified conjugator(s) at degree <= {args.deg} "
             f"over {len(grid)} rescaling(s)"]
    for r, conj in found:
        lines.append(f"  r = {format_rational(r)}: N = {conj}")
    if not found:
        lines.append("  none found at this bound (not a proof of inequivalence)")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(canonical_json(payload))
        lines.append(f"findings written to {args.out}")
    _emit(args, lines, payload)
    return 0


def cmd_case12(args) -> int:
    checks = {
        "linearization": verify_case12_linearization(),
        "bundle_conditions": verify_case12_bundle(),
        "involution_relations": o2_relation_check(case12_involution(), CASE12_WEIGHTS),
        "conjugator_not_real": case12_conjugator().galois() != case12_conjugator(),
    }
    ok = all(checks.values())
    lines = [f"{'ok' if v else 'FAIL'}  {k}" for k, v in checks.items()]
    lines.append("weight-(1,2) circle form linearizes" if ok else "case12 verification FAILED")
    _emit(args, lines, {"checks": checks, "ok": ok})
    return 0 if ok else 1


def cmd_quotient(args) -> int:
    m = _require_m(args.m)
    relation = verify_relation(m)
    gens = make_invariants(m)
    mu0 = linear_circle_form()
    induced = induced_images(mu0, m)
    names = ("T", "W", "U", "V")
    lines = [f"relation U*V - T^n*W^2 = 0: {'ok' if relation else 'FAIL'}"]
    for name, gen in zip(names, gens.as_tuple()):
        lines.append(f"  {name} = {gen}")
    lines.append("images under the linear circle form (polynomial part):")
    for name, img, expr in zip(names, induced.images, induced.expressible):
        status = "invariant subring" if expr else "NOT expressible"
        lines.append(f"  {name} -> {img}   [{status}]")
    payload = {
        "m": m,
        "relation_holds": relation,
        "induced_expressible": list(induced.expressible),
    }
    _emit(args, lines, payload)
    return 0 if relation and all(induced.expressible) else 1


def cmd_selftest(args) -> int:
    ok = acceptance.run_all(report=print)
    print("selftest: all criteria passed" if ok else "selftest: FAILURES above")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circleforms",
        description="Exact verification and classification of equivariant "
                    "real circle forms on affine four-space.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, *, m=False, h=False, hp=False, file=False,
            deg=False, r_grid=False, out=False):
        p = sub.add_parser(name, help=help_text)
        if m:
            p.add_argument("--m", type=int, required=True,
                           help="family parameter m >= 1 (fiber weight 2m+1)")
        if h:
            p.add_argument("--h", required=True,
                           help="ascending rational coefficients of h, e.g. '1,2'")
        if hp:
            p.add_argument("--hp", required=True,
                           help="ascending rational coefficients of the second form")
        if file:
            p.add_argument("--file", help="input JSON document")
        if deg:
            p.add_argument("--deg", type=int, default=6,
                           help="degree bound for conjugator entries (default 6)")
        if r_grid:
            p.add_argument("--r-grid", dest="r_grid",
                           help="comma-separated nonzero rationals (default '1,-1')")
        if out:
            p.add_argument("--out", help="write JSON result to this path")
        p.add_argument("--json", action="store_true",
                       help="print canonical JSON instead of text")
        p.set_defaults(func=func)
        return p

    add("verify-form", cmd_verify_form,
        "verify that h defines a real circle form", m=True, h=True)
    add("equiv", cmd_equiv,
        "decide equivalence of two forms; exit 0 iff equivalent",
        m=True, h=True, hp=True, out=True)
    add("verify-certificate", cmd_verify_certificate,
        "re-verify a stored conjugation certificate", m=True, h=True, hp=True, file=True)
    add("classify", cmd_classify,
        "partition a JSON list of forms into equivalence classes", m=True, file=True)
    add("oracle", cmd_oracle,
        "brute-force bounded-degree conjugator search",
        m=True, h=True, hp=True, deg=True, r_grid=True, out=True)
    add("case12", cmd_case12, "verify the weight-(1,2) linearization")
    add("quotient", cmd_quotient, "invariant generators and quotient relation", m=True)
    add("selftest", cmd_selftest, "run the full acceptance criteria registry")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
