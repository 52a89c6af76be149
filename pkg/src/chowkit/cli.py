"""Command-line front end.

    chowkit worksheet run <file>... [--json] [--strict]
    chowkit schubert pdeg --gr K,N "EXPR" DIM
    chowkit schubert mult --gr K,N "EXPR"
    chowkit chern tau H2 HK K2 E
    chowkit curve <formula> <args>...

Exit codes: 0 success, 1 assertion failures under --strict, 2 parse or
runtime errors.  All values print as exact integers or rationals.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import curves
from .grassmann import GrassmannContext, plucker_degree
from .surface import triple_point_count
from .worksheet import (
    WorksheetRuntimeError,
    WorksheetSyntaxError,
    evaluate,
    parse,
)
from .worksheet.evaluate import Evaluator, render


def _parse_gr(spec: str) -> GrassmannContext:
    try:
        k, n = (int(x) for x in spec.split(","))
        return GrassmannContext(k, n)
    except ValueError as exc:
        raise SystemExit(f"error: bad --gr value {spec!r}: {exc}")


def _schubert_expr(text: str, ctx: GrassmannContext):
    """Evaluate a standalone Schubert expression like 120*s[1,1,1]+16*s[2,1]."""
    from .worksheet.parse import _Parser, tokenize

    parser = _Parser(tokenize(text))
    expr = parser.expr_required()
    if parser.cur.kind not in ("NEWLINE", "EOF"):
        raise WorksheetSyntaxError(
            f"trailing input {parser.cur.text!r}", parser.cur.pos
        )
    ev = Evaluator()
    ev.grassmann = ctx
    return ev.eval(expr)


def _run_worksheets(args) -> int:
    any_failed = False
    hard_error = False
    for path in args.files:
        try:
            text = open(path, encoding="utf-8").read()
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            hard_error = True
            continue
        try:
            report = evaluate(parse(text))
        except (WorksheetSyntaxError, WorksheetRuntimeError) as exc:
            print(f"{path}: error: {exc}", file=sys.stderr)
            hard_error = True
            continue
        if not report.all_passed:
            any_failed = True
        if args.json:
            doc = {"worksheet": path}
            doc.update(report.as_dict())
            print(json.dumps(doc, indent=2))
        else:
            _print_report(path, report)
    if hard_error:
        return 2
    if any_failed and args.strict:
        return 1
    return 0


def _print_report(path, report):
    print(f"== {path}")
    for name, value in report.bindings:
        print(f"  {name} = {value}")
    for a in report.assertions:
        mark = "ok " if a.passed else "FAIL"
        line = f"  [{mark}] {a.expression}"
        if not a.passed:
            line += f"  (actual {a.actual}, expected {a.expected})"
        print(line)
    for note in report.notes:
        print(f"  note: {note}")
    passed = sum(a.passed for a in report.assertions)
    print(f"  {passed}/{len(report.assertions)} assertions passed")


def _fraction(text: str) -> Fraction:
    return Fraction(text)


def _run_curve(args) -> int:
    name = args.formula
    vals = args.args
    try:
        if name == "odd_theta":
            (g,) = map(int, vals)
            print(curves.odd_theta_count(g))
        elif name == "hurwitz":
            gs, gt, n = map(int, vals)
            print(curves.hurwitz_ramification(gs, gt, n))
        elif name == "coincidences":
            e, f = map(_fraction, vals)
            print(curves.correspondence_coincidences(e, f))
        elif name == "secant_pluecker":
            d, g = map(int, vals)
            print(curves.secant_plucker_degree(d, g))
        elif name == "degmult":
            (c,) = map(int, vals)
            print(curves.degeneration_multiplicity(c))
        elif name == "salmon_cayley":
            n1, n2, n3, i12, i13, i23 = map(int, vals)
            deg, m1, m2, m3 = curves.salmon_cayley(
                curves.TripleScrollInput(n1, n2, n3, i12, i13, i23)
            )
            print(f"degree={deg} m1={m1} m2={m2} m3={m3}")
        elif name == "residual":
            total = _fraction(vals[0])
            rest = list(map(_fraction, vals[1:]))
            if len(rest) % 2:
                raise ValueError("parts come as multiplicity degree pairs")
            parts = list(zip(rest[::2], rest[1::2]))
            print(curves.residual_degree(total, parts))
        elif name == "pluecker":
            kwargs = {}
            for item in vals:
                key, _, value = item.partition("=")
                kwargs[key] = _fraction(value)
            data = curves.plucker_solve(curves.PlueckerData(**kwargs))
            print(
                f"d={data.d} m={data.m} nodes={data.nodes} cusps={data.cusps}"
                f" bitangents={data.bitangents} flexes={data.flexes}"
                f" genus={data.genus}"
            )
        else:
            print(f"error: unknown curve formula {name!r}", file=sys.stderr)
            return 2
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="chowkit", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    ws = sub.add_parser("worksheet", help="run worksheet files")
    wssub = ws.add_subparsers(dest="ws_command", required=True)
    run = wssub.add_parser("run", help="evaluate worksheets and report")
    run.add_argument("files", nargs="+")
    run.add_argument("--json", action="store_true", help="emit JSON reports")
    run.add_argument(
        "--strict", action="store_true", help="exit 1 if any assertion fails"
    )

    sch = sub.add_parser("schubert", help="Schubert calculus expressions")
    schsub = sch.add_subparsers(dest="sch_command", required=True)
    pdeg = schsub.add_parser("pdeg", help="Pluecker degree of a cycle")
    pdeg.add_argument("--gr", required=True, metavar="K,N")
    pdeg.add_argument("expr")
    pdeg.add_argument("dim", type=int)
    mult = schsub.add_parser("mult", help="normal form of a Schubert expression")
    mult.add_argument("--gr", required=True, metavar="K,N")
    mult.add_argument("expr")

    chern = sub.add_parser("chern", help="surface characteristic classes")
    chernsub = chern.add_subparsers(dest="chern_command", required=True)
    tau = chernsub.add_parser("tau", help="triple-point count from H2 HK K2 e")
    for field in ("H2", "HK", "K2", "e"):
        tau.add_argument(field)

    curve = sub.add_parser("curve", help="classical curve formulas")
    curve.add_argument("formula")
    curve.add_argument("args", nargs="*")

    args = ap.parse_args(argv)

    if args.command == "worksheet":
        return _run_worksheets(args)
    if args.command == "schubert":
        ctx = _parse_gr(args.gr)
        try:
            value = _schubert_expr(args.expr, ctx)
            if args.sch_command == "pdeg":
                print(render(plucker_degree(value, args.dim)))
            else:
                print(render(value))
        except (WorksheetSyntaxError, WorksheetRuntimeError, ValueError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        return 0
    if args.command == "chern":
        try:
            print(
                render(
                    triple_point_count(
                        _fraction(args.H2),
                        _fraction(args.HK),
                        _fraction(args.K2),
                        _fraction(args.e),
                    )
                )
            )
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        return 0
    if args.command == "curve":
        return _run_curve(args)
    return 2


if __name__ == "__main__":
    sys.exit(main())
