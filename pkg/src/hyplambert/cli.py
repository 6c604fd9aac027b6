"""Command-line interface: CSV tables on standard output.

Exit status is 0 on success, 1 when a verification check fails and 2 on
bad arguments.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys

import numpy as np

from hyplambert import holder, lambert
from hyplambert.errors import HypLambertError, VerificationFailure
from hyplambert.lambert import format_real
from hyplambert.suite import run_suite

# critcurve replaces the open ends of (-2, 0) by points this close to them
CRIT_EDGE = 1e-6

QUAD_RESIDUAL_COLUMNS = ("th_identity", "sh_identity", "angle_identity", "four_sides")


class UsageError(Exception):
    pass


def _fmt(x):
    if x is None:
        return ""
    if isinstance(x, str):
        return x
    return format_real(x)


def _write_rows(out, header, rows):
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow(_fmt(v) for v in row)


def _require_n(n, minimum=2):
    if n < minimum:
        raise UsageError(f"--n must be at least {minimum}, got {n}")


def cmd_quad(args, out):
    q = lambert.build_quad(lambert.QuadParams(args.t, args.theta))
    s = q.params.s
    bounds = lambert.sum_bounds(s)
    res = q.identity_residuals()
    row = (q.params.r, q.d1, q.d2, q.d3, q.d4, q.d3 * q.d4, q.d3 + q.d4,
           lambert.product_bound(s), bounds.lower, bounds.upper,
           *(res[k] for k in QUAD_RESIDUAL_COLUMNS))
    _write_rows(out, lambert.CSV_COLUMNS + QUAD_RESIDUAL_COLUMNS, [row])
    worst = max(abs(res["th_identity"]), abs(res["sh_identity"]), abs(res["angle_identity"]))
    if worst > 1e-12 or abs(res["four_sides"]) > 1e-10:
        print(f"identity residual too large: {worst:.3e}", file=sys.stderr)
        return 1
    return 0


def cmd_sweep(args, out):
    _require_n(args.n, 10)
    try:
        report = lambert.verify_theorems(args.s, args.n)
    except VerificationFailure as exc:
        print(str(exc), file=sys.stderr)
        return 1
    out.write(report.to_csv())
    return 0


def cmd_bounds(args, out):
    _require_n(args.n)
    if not 0.0 < args.s_lo < args.s_hi < 1.0:
        raise UsageError("need 0 < s-lo < s-hi < 1")
    rows = []
    for s in np.linspace(args.s_lo, args.s_hi, args.n):
        s = float(s)
        b = lambert.sum_bounds(s)
        rows.append((s, lambert.product_bound(s), b.lower, b.upper))
    _write_rows(out, ("s", "product_bound", "sum_lower", "sum_upper"), rows)
    return 0


def cmd_region(args, out):
    _require_n(args.n)
    if not (args.p_lo < args.p_hi and args.q_lo < args.q_hi):
        raise UsageError("need p-lo < p-hi and q-lo < q-hi")
    ps = np.linspace(args.p_lo, args.p_hi, args.n)
    qs = np.linspace(args.q_lo, args.q_hi, args.n)
    rows = [(p, q, cls.value, c) for p, q, cls, c in holder.region_map(ps, qs)]
    _write_rows(out, ("p", "q", "class", "c_of_p"), rows)
    return 0


def cmd_critcurve(args, out):
    _require_n(args.n)
    ps = np.linspace(-2.0, 0.0, args.n)
    ps[0], ps[-1] = -2.0 + CRIT_EDGE, -CRIT_EDGE
    rows = [(float(p), holder.critical_curve_C(float(p))) for p in ps]
    _write_rows(out, ("p", "c_of_p"), rows)
    return 0


def cmd_verify(args, out):
    _require_n(args.n)
    if args.seed < 0 or args.seed >= 2**64:
        raise UsageError("--seed must be a 64-bit unsigned integer")
    results = run_suite(args.seed, args.n)
    w = csv.writer(out, lineterminator="\n")
    w.writerow(("property", "status", "worst", "detail"))
    for r in results:
        w.writerow((r.name, "pass" if r.passed else "FAIL", format(r.worst, ".6e"), r.detail))
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyplambert",
        description="Lambert quadrilaterals, hyperbolic distances and arsh convexity (CSV output).",
    )
    parser.add_argument("--out", metavar="PATH", help="also write the output to PATH")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("quad", help="one quadrilateral with identity residuals")
    p.add_argument("--t", type=float, required=True, help="|v_c| in (0, 1)")
    p.add_argument("--theta", type=float, required=True, help="arg v_c in radians, (0, pi/2)")
    p.set_defaults(func=cmd_quad)

    p = sub.add_parser("sweep", help="bound checks over an r-grid for fixed s")
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--n", type=int, default=1001)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("bounds", help="product and sum bounds over an s-grid")
    p.add_argument("--s-lo", type=float, default=0.05)
    p.add_argument("--s-hi", type=float, default=0.95)
    p.add_argument("--n", type=int, default=19)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("region", help="H_{p,q}-convexity class of arsh over a (p, q) grid")
    p.add_argument("--p-lo", type=float, default=-4.0)
    p.add_argument("--p-hi", type=float, default=4.0)
    p.add_argument("--q-lo", type=float, default=-4.0)
    p.add_argument("--q-hi", type=float, default=4.0)
    p.add_argument("--n", type=int, default=21)
    p.set_defaults(func=cmd_region)

    p = sub.add_parser("critcurve", help="critical curve C(p) on (-2, 0)")
    p.add_argument("--n", type=int, default=21)
    p.set_defaults(func=cmd_critcurve)

    p = sub.add_parser("verify", help="run the seeded invariant suite")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--n", type=int, default=1000)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    buf = io.StringIO()
    try:
        code = args.func(args, buf)
    except VerificationFailure as exc:
        print(f"hyplambert {args.command}: {exc}", file=sys.stderr)
        return 1
    except (UsageError, HypLambertError) as exc:
        print(f"hyplambert {args.command}: {exc}", file=sys.stderr)
        return 2
    text = buf.getvalue()
    sys.stdout.write(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
