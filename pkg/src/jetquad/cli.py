"""Command-line interface.

Subcommands::

    jetquad integrate --expr "exp(x^2)" --a 0 --b 2 --breaks 1.38,1.39 \\
                      --centers 0.65,1.38,1.69 --order 5
    jetquad integrate --expr "exp(x^2)" --a 0 --b 2 --rule simpson --n-sub 8
    jetquad extend --expr "exp(x^2)" --center 0.9 --order 5
    jetquad reproduce

Exit status: 0 on success, 2 on invalid input, 3 on a domain error while
evaluating the integrand.  ``reproduce`` exits 1 when a value drifts from its
expected figure by more than the listed tolerance.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import List, Optional, Sequence

from jetquad import classical
from jetquad.autoint import (
    BetaParams,
    IntegrationReport,
    QuadPlan,
    Subinterval,
    integrate_composite,
    make_plan,
)
from jetquad.errors import ConvergenceError, DomainError, JetquadError, ParseError, PlanError
from jetquad.expr import FUNCTION_NAMES, Expr, eval_real, parse
from jetquad.jet import Jet

EXIT_OK = 0
EXIT_DRIFT = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3

CSV_HEADER = ["method", "a", "b", "n_sub", "order", "total", "reference", "error"]

GRAMMAR_HELP = f"""\
expression grammar:
  expr   := term (('+'|'-') term)*
  term   := factor (('*'|'/') factor)*
  factor := '-' factor | atom ('^' uint)?
  atom   := number | 'x' | ident '(' expr ')' | '(' expr ')'
  ident  := {' | '.join(FUNCTION_NAMES)}
"""


class UsageError(JetquadError):
    pass


def fmt10(x: Optional[float]) -> str:
    return "-" if x is None else format(x, ".10g")


def _floats(text: str) -> List[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _ints(text: str) -> List[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _reference_arg(text: str):
    if text in ("auto", "none"):
        return text
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError("--reference takes auto, none or a number")


# -- integrate ---------------------------------------------------------------

def build_plan(args) -> QuadPlan:
    edges_given = args.breaks is not None
    if edges_given:
        breaks = list(args.breaks)
    elif args.n_sub is not None:
        breaks = list(make_plan(args.a, args.b, args.n_sub, "left").breaks)
    else:
        breaks = []
    n = len(breaks) + 1
    if args.orders is not None:
        orders = tuple(args.orders)
        if len(orders) != n:
            raise UsageError(f"--orders needs {n} entries for {n} subintervals")
    else:
        orders = (args.order if args.order is not None else 5,) * n
    if args.centers is not None:
        centers = tuple(args.centers)
        if len(centers) != n:
            raise UsageError(f"--centers needs {n} entries for {n} subintervals")
    else:
        edges = [args.a] + breaks + [args.b]
        strategy = args.center_strategy or "mid"
        if strategy == "left":
            centers = tuple(edges[:-1])
        elif strategy == "right":
            centers = tuple(edges[1:])
        else:
            centers = tuple(0.5 * (lo + hi) for lo, hi in zip(edges, edges[1:]))
    return QuadPlan(args.a, args.b, tuple(breaks), centers, orders)


def build_beta(args, max_order: int) -> BetaParams:
    if args.beta is None:
        return BetaParams.default(max_order)
    if len(args.beta) > max_order:
        raise UsageError(f"--beta has {len(args.beta)} entries but the highest order is {max_order}")
    return BetaParams(tuple(args.beta)).at_order(max_order)


def _real_function(e: Expr):
    return lambda x: eval_real(e, x)


def run_integrate(args) -> IntegrationReport:
    e = parse(args.expr)
    if args.rule == "auto":
        plan = build_plan(args)
        beta = build_beta(args, max(plan.orders))
        report = integrate_composite(e, plan, beta)
    else:
        for flag in ("order", "orders", "breaks", "centers", "beta", "center_strategy"):
            if getattr(args, flag) is not None:
                raise UsageError(f"--{flag.replace('_', '-')} only applies to --rule auto")
        if args.n_sub is None:
            raise UsageError(f"--rule {args.rule} requires --n-sub")
        rule = classical.RULES[args.rule]
        value = rule(_real_function(e), args.a, args.b, args.n_sub)
        report = IntegrationReport(
            method=args.rule,
            a=args.a,
            b=args.b,
            subintervals=[Subinterval(0, args.a, args.b, None, None, value)],
            total=value,
            n_sub=args.n_sub,
        )
    ref = args.reference
    if ref == "auto":
        ref = classical.reference_integral(_real_function(e), args.a, args.b)
    elif ref == "none":
        ref = None
    return report.with_reference(ref)


def report_to_dict(r: IntegrationReport) -> dict:
    return {
        "method": r.method,
        "plan": {
            "a": r.a,
            "b": r.b,
            "n_sub": r.n_sub,
            "breaks": list(r.breaks),
            "centers": list(r.centers),
            "orders": list(r.orders),
            "beta": None if r.beta is None else list(r.beta),
        },
        "subintervals": [
            {
                "index": s.index,
                "a": s.a,
                "b": s.b,
                "center": s.center,
                "order": s.order,
                "value": s.value,
            }
            for s in r.subintervals
        ],
        "total": r.total,
        "reference": r.reference,
        "error": r.signed_error,
    }


def _orders_cell(r: IntegrationReport) -> str:
    if not r.orders:
        return ""
    if len(set(r.orders)) == 1:
        return str(r.orders[0])
    return ";".join(str(k) for k in r.orders)


def render_csv(r: IntegrationReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    opt = lambda x: "" if x is None else repr(x)  # noqa: E731
    w.writerow(
        [r.method, repr(r.a), repr(r.b), r.n_sub, _orders_cell(r), repr(r.total), opt(r.reference), opt(r.signed_error)]
    )
    return buf.getvalue()


def render_text(r: IntegrationReport) -> str:
    lines = [f"method     {r.method}", f"interval   [{fmt10(r.a)}, {fmt10(r.b)}]"]
    if r.method == "auto":
        lines.append("beta       " + ", ".join(fmt10(x) for x in r.beta))
        lines.append("")
        lines.append(f"{'#':>3}  {'from':>12}  {'to':>12}  {'center':>12}  {'order':>5}  {'value':>18}")
        for s in r.subintervals:
            lines.append(
                f"{s.index:>3}  {fmt10(s.a):>12}  {fmt10(s.b):>12}  {fmt10(s.center):>12}  "
                f"{s.order:>5}  {fmt10(s.value):>18}"
            )
        lines.append("")
    else:
        lines.append(f"n_sub      {r.n_sub}")
    lines.append(f"total      {fmt10(r.total)}")
    if r.reference is not None:
        lines.append(f"reference  {fmt10(r.reference)}")
        lines.append(f"error      {fmt10(r.signed_error)}")
    return "\n".join(lines) + "\n"


def render_report(r: IntegrationReport, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report_to_dict(r), indent=2) + "\n"
    if fmt == "csv":
        return render_csv(r)
    return render_text(r)


# -- extend ------------------------------------------------------------------

def run_extend(args) -> Jet:
    e = parse(args.expr)
    order = args.order
    if args.beta is not None:
        if len(args.beta) > order:
            raise UsageError(f"--beta has {len(args.beta)} entries but --order is {order}")
        beta = BetaParams(tuple(args.beta)).at_order(order)
        u = Jet((args.center,) + beta.beta)
    else:
        u = Jet.variable(args.center, order)
    return e(u)


def render_jet(y: Jet, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"order": y.order, "coeffs": list(y.coeffs)}) + "\n"
    if fmt == "csv":
        return "i,coeff\n" + "".join(f"{i},{c!r}\n" for i, c in enumerate(y.coeffs))
    return "".join(f"y_{i} = {fmt10(c)}\n" for i, c in enumerate(y.coeffs))


# -- reproduce ----------------------------------------------------------------

def _exp_sq(x):
    return math.exp(x * x)


# name, description, plan (breaks, centers) or rule (name, n_sub), expected, tolerance
WORKED_CASES = [
    ("plan1", "auto, center 0", ((), (0.0,)), 7.866666667, 1e-8),
    ("plan2", "auto, center 0.9", ((), (0.9,)), 14.081438, 5e-4),
    ("plan3", "auto, breaks 1.38, centers 0, 1.38", ((1.38,), (0.0, 1.38)), 15.82475528, 5e-4),
    ("plan4", "auto, breaks 1.38, centers 0.65, 1.38", ((1.38,), (0.65, 1.38)), 16.13772199, 5e-4),
    (
        "plan5",
        "auto, breaks 1.38, 1.39, centers 0.65, 1.38, 1.69",
        ((1.38, 1.39), (0.65, 1.38, 1.69)),
        16.40544197,
        5e-4,
    ),
    ("M(8)", "midpoint, 8 subintervals", ("midpoint", 8), 15.9056767, 1e-6),
    ("T(8)", "trapezoid, 8 subintervals", ("trapezoid", 8), 17.5650858, 1e-6),
    ("S(8)", "simpson, 8 subintervals", ("simpson", 8), 16.5385947, 1e-6),
    ("M(16)", "midpoint, 16 subintervals", ("midpoint", 16), 16.3118539, 1e-6),
    ("T(16)", "trapezoid, 16 subintervals", ("trapezoid", 16), 16.7353812, 1e-6),
]

# pairs (better, worse): |error| of the first must be below the second
WORKED_CLAIMS = [
    ("plan5", "S(8)"),
    ("S(8)", "M(16)"),
    ("M(16)", "T(16)"),
    ("plan3", "T(8)"),
    ("plan4", "M(8)"),
]


def run_reproduce() -> dict:
    e = parse("exp(x^2)")
    reference = classical.reference_integral(_exp_sq, 0.0, 2.0)
    rows = []
    values = {}
    for name, desc, spec, expected, tol in WORKED_CASES:
        if isinstance(spec[0], str):
            rule, n_sub = spec
            value = classical.RULES[rule](_exp_sq, 0.0, 2.0, n_sub)
        else:
            breaks, centers = spec
            plan = QuadPlan(0.0, 2.0, breaks, centers, (5,) * len(centers))
            value = integrate_composite(e, plan, BetaParams.default(5)).total
        delta = abs(value - expected)
        values[name] = value
        rows.append(
            {
                "name": name,
                "description": desc,
                "value": value,
                "expected": expected,
                "delta": delta,
                "tolerance": tol,
                "error": value - reference,
                "ok": delta <= tol,
            }
        )
    claims = [
        {
            "better": better,
            "worse": worse,
            "ok": abs(values[better] - reference) < abs(values[worse] - reference),
        }
        for better, worse in WORKED_CLAIMS
    ]
    ok = all(r["ok"] for r in rows) and all(c["ok"] for c in claims)
    return {"integrand": "exp(x^2)", "a": 0.0, "b": 2.0, "reference": reference, "rows": rows, "claims": claims, "ok": ok}


def render_reproduce(result: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(result, indent=2) + "\n"
    lines = [
        f"integral of {result['integrand']} over [{fmt10(result['a'])}, {fmt10(result['b'])}]",
        f"reference {fmt10(result['reference'])}",
        "",
        f"{'case':<6}  {'value':>16}  {'expected':>16}  {'|delta|':>10}  {'tol':>7}  {'error':>12}  ok   method",
    ]
    for r in result["rows"]:
        lines.append(
            f"{r['name']:<6}  {fmt10(r['value']):>16}  {fmt10(r['expected']):>16}  "
            f"{r['delta']:>10.2e}  {r['tolerance']:>7.0e}  {fmt10(r['error']):>12}  "
            f"{'yes' if r['ok'] else 'NO ':<3}  {r['description']}"
        )
    lines.append("")
    for c in result["claims"]:
        lines.append(f"|error {c['better']}| < |error {c['worse']}|: {'yes' if c['ok'] else 'NO'}")
    return "\n".join(lines) + "\n"


# -- entry point ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="jetquad",
        description="Integrate by evaluating the integrand on truncated Taylor jets.",
        epilog=GRAMMAR_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = p.add_subparsers(dest="command", required=True)

    pi = sub.add_parser(
        "integrate",
        help="integrate an expression over [a, b]",
        epilog=GRAMMAR_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    pi.add_argument("--expr", required=True, help="integrand in x")
    pi.add_argument("--a", type=float, required=True)
    pi.add_argument("--b", type=float, required=True)
    g = pi.add_mutually_exclusive_group()
    g.add_argument("--order", type=int, help="Taylor order for every subinterval (default 5)")
    g.add_argument("--orders", type=_ints, help="per-subinterval orders k1,k2,...")
    pi.add_argument("--breaks", type=_floats, help="interior breakpoints x1,x2,...")
    g = pi.add_mutually_exclusive_group()
    g.add_argument("--centers", type=_floats, help="per-subinterval centers c1,c2,...")
    g.add_argument("--center-strategy", choices=["left", "mid", "right"], help="default mid")
    pi.add_argument("--beta", type=_floats, help="embedding coefficients b1,b2,... (b1 != 0)")
    pi.add_argument("--rule", choices=["auto", "midpoint", "trapezoid", "simpson"], default="auto")
    pi.add_argument("--n-sub", type=int, help="number of uniform subintervals")
    pi.add_argument("--format", choices=["text", "json", "csv"], default="text")
    pi.add_argument("--reference", type=_reference_arg, default="auto", help="auto, none or a number")

    pe = sub.add_parser("extend", help="print the jet coefficients of an expression at a center")
    pe.add_argument("--expr", required=True)
    pe.add_argument("--center", type=float, required=True)
    pe.add_argument("--order", type=int, default=5)
    pe.add_argument("--beta", type=_floats)
    pe.add_argument("--format", choices=["text", "json", "csv"], default="text")

    pr = sub.add_parser("reproduce", help="recompute the exp(x^2) comparison table")
    pr.add_argument("--format", choices=["text", "json"], default="text")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "integrate":
            if args.order is not None and args.order < 1:
                raise UsageError("--order must be >= 1")
            if args.n_sub is not None and args.n_sub < 1:
                raise UsageError("--n-sub must be >= 1")
            out.write(render_report(run_integrate(args), args.format))
        elif args.command == "extend":
            if args.order < 0:
                raise UsageError("--order must be >= 0")
            out.write(render_jet(run_extend(args), args.format))
        else:
            result = run_reproduce()
            out.write(render_reproduce(result, args.format))
            return EXIT_OK if result["ok"] else EXIT_DRIFT
    except (UsageError, ParseError, PlanError) as exc:
        print(f"jetquad: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, ConvergenceError) as exc:
        print(f"jetquad: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
