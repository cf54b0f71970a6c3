"""Command-line entry point (``saddlecoef``)."""

from __future__ import annotations

import argparse
import csv
import sys

import mpmath

from . import harness, lagrangean, oracles, saddle, stirling
from .catalog import CATALOG, get_phi
from .series import to_mpf


def _phi(name):
    try:
        return get_phi(name)
    except KeyError as exc:
        raise argparse.ArgumentTypeError(str(exc.args[0])) from None


def _positive(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return v


def _fmt(x, digits=20):
    return mpmath.nstr(x, digits)


def cmd_stirling(args, out):
    table = stirling.coefficient_table(args.max_m)
    for m in range(table.max_m + 1):
        vals = (table.c[m], table.d[m], table.g[m], table.h[m])
        if args.exact:
            cells = [str(v) for v in vals]
        else:
            cells = [_fmt(to_mpf(v), 17) for v in vals]
        out.write(f"m={m}: " + "  ".join(f"{k}={v}" for k, v in zip("cdgh", cells)) + "\n")
    bad = table.failures()
    for msg in bad:
        out.write(f"FAIL {msg}\n")
    return 1 if bad else 0


def cmd_identity(args, out):
    table = stirling.coefficient_table(args.max_m)
    status = 0
    for m in range(table.max_m + 1):
        cd = table.c[m] == table.d[m]
        gh = m == 1 or table.g[m] == table.h[m]
        ok = cd and gh
        status |= not ok
        note = "  g_1-h_1 exempt" if m == 1 else ""
        out.write(f"{'PASS' if ok else 'FAIL'} m={m} c=d:{cd} g=h:{gh}{note}\n")
    return int(status)


def cmd_expand(args, out):
    res = saddle.expand(args.phi, args.n, args.terms, args.variant, args.precision)
    exact = oracles.coefficient_an(args.phi, args.n)
    out.write(f"phi={args.phi.name} n={args.n} variant={args.variant} saddle={_fmt(res.saddle)}\n")
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["m", "coefficient", "term", "partial_sum", "rel_error"])
    with mpmath.workprec(args.precision):
        ex = to_mpf(exact)
        for m in range(res.M + 1):
            err = (res.partial_sums[m] - ex) / ex
            w.writerow([m, _fmt(res.coefficients[m]), _fmt(res.terms[m]), _fmt(res.partial_sums[m]), _fmt(err, 6)])
        out.write(f"exact={_fmt(ex, 30)}\n")
    return 0


def cmd_delta(args, out):
    rows = harness.delta_sweep_rows(args.phi, args.n_from, args.n_to, args.step,
                                    range(args.max_M + 1), args.precision)
    text = harness.rows_to_csv(rows)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


def cmd_oracle(args, out):
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["n", "value"])
    for n, v in enumerate(oracles.exact_sequence(args.phi, args.n_to)):
        w.writerow([n, v])
    return 0


def cmd_catalan(args, out):
    which = args.which or list(lagrangean.CATALAN_WHICH)
    results = {k: lagrangean.catalan_expansions(args.n, args.terms, k, args.precision) for k in which}
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["M"] + [f"{k}_rel_error" for k in which])
    with mpmath.workprec(args.precision):
        for M in range(args.terms + 1):
            row = [M]
            for k in which:
                r = results[k]
                ex = mpmath.mpf(r.extra["exact"])
                row.append(_fmt((r.partial_sums[M] - ex) / ex, 6))
            w.writerow(row)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="saddlecoef", description="Saddle-point expansion coefficients.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("stirling", help="table of c, d, g, h")
    s.add_argument("--max-m", type=_positive, required=True)
    s.add_argument("--exact", action="store_true", help="print exact rationals")
    s.set_defaults(func=cmd_stirling)

    s = sub.add_parser("identity", help="PASS/FAIL per m for c=d and g=h")
    s.add_argument("--max-m", type=_positive, required=True)
    s.set_defaults(func=cmd_identity)

    s = sub.add_parser("expand", help="saddle-point expansion of [z^n] exp(phi)")
    s.add_argument("--phi", type=_phi, required=True, help=f"one of {sorted(CATALOG)}")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--terms", type=_positive, required=True)
    s.add_argument("--variant", choices=saddle.VARIANTS, required=True)
    s.add_argument("--precision", type=int, default=saddle.DEFAULT_PREC)
    s.set_defaults(func=cmd_expand)

    s = sub.add_parser("delta", help="CSV sweep of normalized errors")
    s.add_argument("--phi", type=_phi, required=True)
    s.add_argument("--n-from", type=int, required=True)
    s.add_argument("--n-to", type=int, required=True)
    s.add_argument("--step", type=int, default=1)
    s.add_argument("--max-M", type=_positive, required=True)
    s.add_argument("--precision", type=int, default=saddle.DEFAULT_PREC)
    s.add_argument("--out", help="output file (default stdout)")
    s.set_defaults(func=cmd_delta)

    s = sub.add_parser("oracle", help="exact sequence as CSV")
    s.add_argument("--phi", type=_phi, required=True)
    s.add_argument("--n-to", type=_positive, required=True)
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("catalan", help="Catalan expansions side by side")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--terms", type=_positive, required=True)
    s.add_argument("--which", choices=lagrangean.CATALAN_WHICH, action="append")
    s.add_argument("--precision", type=int, default=saddle.DEFAULT_PREC)
    s.set_defaults(func=cmd_catalan)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "precision", 64) < 53:
        parser.print_usage(sys.stderr)
        sys.stderr.write("saddlecoef: error: --precision must be at least 53\n")
        return 2
    try:
        return args.func(args, out)
    except ValueError as exc:
        sys.stderr.write(f"saddlecoef: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
