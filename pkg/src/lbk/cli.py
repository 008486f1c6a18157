"""Command-line front end: eval, quad, verify, bench, table.

Angles are accepted in radians only.  Results go to stdout, diagnostics to
stderr.  Exit codes: 0 success, 1 verification failure, 2 invalid input,
3 quadrature non-convergence.  Floats are rendered with 17 significant
digits in both JSON and CSV; JSON uses a canonical compact form whose
parse/re-render is the identity.  The only environment input is
LBK_WORKERS, which caps sweep parallelism.
"""

import argparse
import csv
import io
import json
import math
import sys
import time

from .kernel import IntegralParams, closed_form_I
from .oracle import QuadratureSpec, integrate_I
from .verify import SweepConfig, sweep_random

_BENCH_R_VALUES = (0.5, 5.0, 25.0, 50.0)


def _fmt(x):
    return format(float(x), ".17g")


def render_json(obj):
    """Canonical JSON: insertion-ordered keys, 17-significant-digit floats."""
    if isinstance(obj, dict):
        items = ",".join(f"{render_json(str(k))}:{render_json(v)}"
                         for k, v in obj.items())
        return "{" + items + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(render_json(v) for v in obj) + "]"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _fmt(obj)
    if obj is None:
        return "null"
    return json.dumps(obj)


def render_csv(header, rows):
    """CSV text with a bare-newline terminator and 17-digit floats."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(["" if v is None else
                         _fmt(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def _emit(args, payload, header, rows):
    if args.format == "json":
        print(render_json(payload))
    else:
        print(render_csv(header, rows), end="")


def _record(p, value, method, abs_err=None):
    rec = {"n": p.n, "m": p.m, "alpha": p.alpha, "R": p.R,
           "re": value.real, "im": value.imag, "method": method}
    if abs_err is not None:
        rec["abs_err"] = abs_err
    return rec


_RECORD_HEADER = ["n", "m", "alpha", "R", "re", "im", "method", "abs_err"]


def _record_row(rec):
    return [rec["n"], rec["m"], rec["alpha"], rec["R"], rec["re"], rec["im"],
            rec["method"], rec.get("abs_err")]


def _params_from(args):
    try:
        return IntegralParams(args.n, args.m, args.alpha, args.R)
    except ValueError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return None


def _spec_from(args):
    try:
        return QuadratureSpec(
            base_panels=getattr(args, "base_panels", None),
            nodes_per_panel=getattr(args, "nodes_per_panel", 32),
            abs_tol=args.abs_tol if args.abs_tol is not None else 1e-12,
            rel_tol=args.rel_tol if args.rel_tol is not None else 1e-10,
            max_refinements=getattr(args, "max_refinements", 12),
        )
    except ValueError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return None


def cmd_eval(args):
    p = _params_from(args)
    if p is None:
        return 2
    rec = _record(p, closed_form_I(p), "closed")
    _emit(args, rec, _RECORD_HEADER, [_record_row(rec)])
    return 0


def cmd_quad(args):
    p = _params_from(args)
    if p is None:
        return 2
    spec = _spec_from(args)
    if spec is None:
        return 2
    result = integrate_I(p, spec)
    rec = _record(p, result.value, "quad")
    rec["est_error"] = result.est_error
    rec["panels"] = result.panels_used
    rec["converged"] = result.converged
    header = _RECORD_HEADER + ["est_error", "panels", "converged"]
    row = _record_row(rec) + [result.est_error, result.panels_used,
                              result.converged]
    _emit(args, rec, header, [row])
    if not result.converged:
        print("quadrature did not converge within max refinements",
              file=sys.stderr)
        return 3
    return 0


def cmd_verify(args):
    try:
        cfg = SweepConfig(
            seed=args.seed, cases=args.cases, n_max=args.n_max,
            R_max=args.R_max, alpha_margin=args.alpha_margin,
            abs_tol=args.abs_tol if args.abs_tol is not None else 1e-8,
            rel_tol=args.rel_tol if args.rel_tol is not None else 1e-8,
        )
    except ValueError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2
    try:
        report = sweep_random(cfg)
    except ValueError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2
    payload = {
        "seed": cfg.seed, "cases": cfg.cases, "n_max": cfg.n_max,
        "R_max": cfg.R_max, "alpha_margin": cfg.alpha_margin,
        "abs_tol": cfg.abs_tol, "rel_tol": cfg.rel_tol,
        "total": report.total,
        "failures": [
            {"n": f.params.n, "m": f.params.m, "alpha": f.params.alpha,
             "R": f.params.R, "closed_re": f.closed.real,
             "closed_im": f.closed.imag, "oracle_re": f.oracle.real,
             "oracle_im": f.oracle.imag, "abs_err": f.abs_err,
             "rel_err": f.rel_err, "converged": f.oracle_converged}
            for f in report.failures],
        "max_abs_err": report.max_abs_err,
        "max_rel_err": report.max_rel_err,
        "wall_time": report.wall_time,
    }
    header = ["seed", "cases", "n_max", "R_max", "alpha_margin", "abs_tol",
              "rel_tol", "total", "failures", "max_abs_err", "max_rel_err",
              "wall_time"]
    row = [cfg.seed, cfg.cases, cfg.n_max, cfg.R_max, cfg.alpha_margin,
           cfg.abs_tol, cfg.rel_tol, report.total, len(report.failures),
           report.max_abs_err, report.max_rel_err, report.wall_time]
    _emit(args, payload, header, [row])
    return 0 if not report.failures else 1


def bench_rows(n_max, R_max, reps):
    """Deterministic closed-vs-quadrature timing grid.

    One row per (n, R) with n in 0..n_max and R over the fixed value list
    clipped to R_max; m = n//2 and alpha = 1.0 throughout.  Times are mean
    microseconds over ``reps`` repetitions; rows with reps < 5 are flagged
    noisy.
    """
    Rs = [r for r in _BENCH_R_VALUES if r <= R_max] or [R_max]
    rows = []
    for n in range(n_max + 1):
        for R in Rs:
            p = IntegralParams(n, n // 2, 1.0, R)
            t0 = time.perf_counter()
            for _ in range(reps):
                closed_form_I(p)
            t_closed = (time.perf_counter() - t0) / reps
            t0 = time.perf_counter()
            for _ in range(reps):
                integrate_I(p)
            t_quad = (time.perf_counter() - t0) / reps
            rows.append({"n": n, "R": R, "closed_us": 1e6 * t_closed,
                         "quad_us": 1e6 * t_quad,
                         "speedup": t_quad / t_closed, "reps": reps,
                         "noisy": reps < 5})
    return rows


def cmd_bench(args):
    if args.n_max < 0 or not args.R_max > 0.0 or args.reps < 1:
        print("invalid input: require n-max >= 0, R-max > 0, reps >= 1",
              file=sys.stderr)
        return 2
    rows = bench_rows(args.n_max, args.R_max, args.reps)
    header = ["n", "R", "closed_us", "quad_us", "speedup", "reps", "noisy"]
    _emit(args, {"rows": rows},
          header, [[r[k] for k in header] for r in rows])
    return 0


def cmd_table(args):
    if args.n_max < 0:
        print("invalid input: n-max must be non-negative", file=sys.stderr)
        return 2
    Rs = args.R if args.R else [1.0]
    if any(R < 0.0 for R in Rs):
        print("invalid input: R must be non-negative", file=sys.stderr)
        return 2
    if not 0.0 <= args.alpha <= math.pi:
        print("invalid input: alpha must lie in [0, pi] radians",
              file=sys.stderr)
        return 2
    spec = _spec_from(args)
    if spec is None:
        return 2

    records = []
    unconverged = False
    for n in range(args.n_max + 1):
        ms = range(-n, n + 1) if args.m is None else [args.m]
        for m in ms:
            if abs(m) > n:
                continue
            for R in Rs:
                p = IntegralParams(n, m, args.alpha, R)
                closed = quad = None
                if args.method == "closed" or args.compare:
                    closed = closed_form_I(p)
                if args.method == "quad" or args.compare:
                    result = integrate_I(p, spec)
                    quad = result.value
                    unconverged = unconverged or not result.converged
                shown = closed if args.method == "closed" else quad
                abs_err = abs(closed - quad) if args.compare else None
                records.append(_record(p, shown, args.method, abs_err))
    if args.m is not None and not records:
        print(f"invalid input: order must satisfy |m| <= n for some row "
              f"(got m={args.m}, n-max={args.n_max})", file=sys.stderr)
        return 2
    _emit(args, records, _RECORD_HEADER,
          [_record_row(rec) for rec in records])
    if unconverged:
        print("quadrature did not converge within max refinements",
              file=sys.stderr)
        return 3
    return 0


def _add_shared(sub):
    sub.add_argument("--format", choices=("json", "csv"), default="json")
    sub.add_argument("--abs-tol", dest="abs_tol", type=float, default=None)
    sub.add_argument("--rel-tol", dest="rel_tol", type=float, default=None)


def _add_point(sub):
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--m", type=int, required=True)
    sub.add_argument("--alpha", type=float, required=True,
                     help="tilt angle in radians")
    sub.add_argument("--R", type=float, required=True)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="lbk",
        description="Closed-form and quadrature evaluation of the "
                    "Bessel-times-Legendre angular integral family "
                    "(all angles in radians)")
    subs = parser.add_subparsers(dest="command", required=True)

    p_eval = subs.add_parser("eval", help="closed-form evaluation")
    _add_point(p_eval)
    _add_shared(p_eval)
    p_eval.set_defaults(func=cmd_eval)

    p_quad = subs.add_parser("quad", help="quadrature evaluation")
    _add_point(p_quad)
    _add_shared(p_quad)
    p_quad.add_argument("--base-panels", dest="base_panels", type=int,
                        default=None)
    p_quad.add_argument("--nodes-per-panel", dest="nodes_per_panel", type=int,
                        default=32)
    p_quad.add_argument("--max-refinements", dest="max_refinements", type=int,
                        default=12)
    p_quad.set_defaults(func=cmd_quad)

    p_verify = subs.add_parser("verify", help="seeded random identity sweep")
    p_verify.add_argument("--seed", type=int, default=42)
    p_verify.add_argument("--cases", type=int, default=100)
    p_verify.add_argument("--n-max", dest="n_max", type=int, default=20)
    p_verify.add_argument("--R-max", dest="R_max", type=float, default=50.0)
    p_verify.add_argument("--alpha-margin", dest="alpha_margin", type=float,
                          default=0.05)
    _add_shared(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_bench = subs.add_parser("bench",
                              help="closed form vs quadrature timings")
    p_bench.add_argument("--n-max", dest="n_max", type=int, default=10)
    p_bench.add_argument("--R-max", dest="R_max", type=float, default=50.0)
    p_bench.add_argument("--reps", type=int, default=10)
    _add_shared(p_bench)
    p_bench.set_defaults(func=cmd_bench)

    p_table = subs.add_parser("table", help="batch evaluation table")
    p_table.add_argument("--n-max", dest="n_max", type=int, required=True)
    group = p_table.add_mutually_exclusive_group()
    group.add_argument("--all-m", dest="m", action="store_const", const=None,
                       help="all orders -n..n per degree (default)")
    group.add_argument("--m", type=int, default=None)
    p_table.add_argument("--alpha", type=float, default=1.0,
                         help="tilt angle in radians")
    p_table.add_argument("--R", type=float, action="append", default=None)
    p_table.add_argument("--method", choices=("closed", "quad"),
                         default="closed")
    p_table.add_argument("--compare", action="store_true",
                         help="run both methods and fill abs_err")
    _add_shared(p_table)
    p_table.set_defaults(func=cmd_table)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return args.func(args)


def app():
    raise SystemExit(main())


if __name__ == "__main__":
    app()
