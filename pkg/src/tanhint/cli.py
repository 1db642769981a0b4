"""Command-line front end: ``tanhint eval | verify | table``.

Exit codes: 0 success, 1 verification failure, 2 usage or invalid ``(m, n)``.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from decimal import Decimal

from . import render
from .closed_form import IntegralSpec, InvalidSpecError, ZetaCombination, theorem_sum, valid_specs, validate_spec
from .numeric import BigFloat, QuadratureError, eval_combination, quadrature
from .residue_oracle import oracle_closed_form

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


@dataclass(frozen=True)
class Verification:
    spec: IntegralSpec
    closed_form: ZetaCombination
    oracle: ZetaCombination
    exact_value: BigFloat
    quadrature: BigFloat | None
    discrepancy: Decimal | None
    tolerance: float
    note: str = ""

    @property
    def exact_match(self) -> bool:
        return self.closed_form == self.oracle

    @property
    def passed(self) -> bool:
        return self.exact_match and self.discrepancy is not None and self.discrepancy <= Decimal(repr(self.tolerance))


def run_verification(spec: IntegralSpec, digits: int = 30, tolerance: float = 1e-10) -> Verification:
    """Both exact routes, the high-precision value and the quadrature, side by side."""
    closed = theorem_sum(spec)
    oracle = oracle_closed_form(spec)
    exact = eval_combination(closed, digits)
    # Half the tolerance goes to the quadrature so the total discrepancy fits.
    try:
        quad = quadrature(spec, max(tolerance / 2, 1e-13))
    except QuadratureError as exc:
        return Verification(spec, closed, oracle, exact, None, None, tolerance, f"{exc} (achieved {exc.achieved:.3g})")
    return Verification(spec, closed, oracle, exact, quad, abs(quad.value - exact.value), tolerance)


def _verification_obj(v: Verification) -> dict:
    obj = render.to_json_obj(v.spec, v.closed_form)
    obj.update(
        oracle_terms=render.to_json_obj(v.spec, v.oracle)["terms"],
        exact_match=v.exact_match,
        value=str(v.exact_value),
        quadrature=None if v.quadrature is None else repr(float(v.quadrature.value)),
        discrepancy=None if v.discrepancy is None else f"{v.discrepancy:.3e}",
        tolerance=repr(v.tolerance),
        verdict="PASS" if v.passed else "FAIL",
    )
    return obj


def _verification_text(v: Verification) -> str:
    quad = "unavailable" if v.quadrature is None else f"{v.quadrature} (+/- {float(v.quadrature.error):.1e})"
    lines = [
        f"{v.spec}",
        f"  closed form    : {render.to_text(v.closed_form)}",
        f"  residue oracle : {render.to_text(v.oracle)}",
        f"  exact match    : {'yes' if v.exact_match else 'NO'}",
        f"  value          : {v.exact_value}",
        f"  quadrature     : {quad}",
        f"  discrepancy    : {'n/a' if v.discrepancy is None else f'{v.discrepancy:.3e}'} (tolerance {v.tolerance:g})",
        f"  verdict        : {'PASS' if v.passed else 'FAIL'}",
    ]
    if v.note:
        lines.append(f"  note           : {v.note}")
    return "\n".join(lines)


def _spec_or_exit(m: int, n: int) -> IntegralSpec:
    try:
        return validate_spec(m, n)
    except InvalidSpecError as exc:
        print(f"error: {exc} (requires {exc.condition})", file=sys.stderr)
        raise SystemExit(EXIT_USAGE) from None


def cmd_eval(args: argparse.Namespace) -> int:
    spec = _spec_or_exit(args.m, args.n)
    print(render.render(spec, theorem_sum(spec), args.format))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    spec = _spec_or_exit(args.m, args.n)
    v = run_verification(spec, args.digits, args.tolerance)
    if args.format == "json":
        print(render.dumps(_verification_obj(v)))
    else:
        print(_verification_text(v))
    return EXIT_OK if v.passed else EXIT_FAIL


def cmd_table(args: argparse.Namespace) -> int:
    if args.max_m < 2:
        print(f"error: --max-m must be >= 2, got {args.max_m}", file=sys.stderr)
        return EXIT_USAGE
    specs = valid_specs(args.max_m)
    closed = [theorem_sum(s) for s in specs]
    checks = [run_verification(s, args.digits, args.tolerance) for s in specs] if args.check else None

    if args.format == "json":
        rows = []
        for i, (spec, zc) in enumerate(zip(specs, closed)):
            row = render.to_json_obj(spec, zc)
            if checks:
                row["verdict"] = "PASS" if checks[i].passed else "FAIL"
            rows.append(row)
        print(render.dumps(rows))
    else:
        for i, (spec, zc) in enumerate(zip(specs, closed)):
            if args.format == "latex":
                line = rf"J({spec.m},{spec.n}) &= {render.to_latex(zc)} \\"
            else:
                line = render.render(spec, zc, "text")
            if checks:
                c = checks[i]
                disc = "n/a" if c.discrepancy is None else f"{c.discrepancy:.1e}"
                mark = f"[{'PASS' if c.passed else 'FAIL'} {disc}]"
                line = f"{line} % {mark}" if args.format == "latex" else f"{line}  {mark}"
            print(line)
    if checks and not all(c.passed for c in checks):
        return EXIT_FAIL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tanhint",
        description="Closed forms of J(m,n) = int_0^oo tanh(z)^m / z^n dz.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=render.FORMATS, default="text")
        p.add_argument("--digits", type=int, default=30, help="digits for the exact-side value (default 30)")
        p.add_argument("--tolerance", type=float, default=1e-10, help="allowed numeric discrepancy (default 1e-10)")

    p_eval = sub.add_parser("eval", help="print the closed form of J(m,n)")
    p_eval.add_argument("--m", type=int, required=True)
    p_eval.add_argument("--n", type=int, required=True)
    common(p_eval)
    p_eval.set_defaults(func=cmd_eval)

    p_verify = sub.add_parser("verify", help="cross-check closed form, residue oracle and quadrature")
    p_verify.add_argument("--m", type=int, required=True)
    p_verify.add_argument("--n", type=int, required=True)
    common(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_table = sub.add_parser("table", help="closed forms for every valid (m,n) with m <= max-m")
    p_table.add_argument("--max-m", type=int, default=7)
    p_table.add_argument("--check", action="store_true", help="also verify every row numerically")
    common(p_table)
    p_table.set_defaults(func=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.digits < 1 or not args.tolerance > 0:
        print("error: --digits must be >= 1 and --tolerance > 0", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except SystemExit as exc:
        return int(exc.code)


if __name__ == "__main__":
    sys.exit(main())
