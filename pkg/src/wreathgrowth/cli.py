"""Command-line interface: ``wreathgrowth <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import sys
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Any, Sequence

from . import asymptotics as asy
from .checks import run_checks
from .growth import (
    ALT_BASE,
    FHAT_MAX_N,
    SYM_BASE,
    GroupSpec,
    Kind,
    fhat_polynomial,
    growth_series,
    no_coefficient,
)
from .partitions import generalized_partition_series, hook_lengths, is_partition

EXACT_MAX_ORDER = 2000
TABLE_ROWS = (1, 10, 100, 200, 300, 400, 500)
_NUMERIC = re.compile(r"[-+0-9./e]*|overflow")


def significant(x: Fraction, digits: int = 10) -> str:
    """Round an exact rational to ``digits`` significant digits, keeping trailing zeros."""
    with localcontext() as ctx:
        ctx.prec = digits
        d = Decimal(x.numerator) / Decimal(x.denominator)
    exp = d.adjusted()
    return f"{d:.{max(digits - 1 - exp, 0)}f}"


def _cell(v: Any, for_json: bool) -> Any:
    if isinstance(v, bool) or v is None:
        return v if for_json else ("" if v is None else str(v).lower())
    if isinstance(v, int):
        return str(v)
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, (list, tuple)):
        return [_cell(x, for_json) for x in v] if for_json else " ".join(str(_cell(x, False)) for x in v)
    return str(v)


def render(command: str, params: dict, columns: Sequence[str], rows: list[Sequence], fmt: str) -> str:
    if fmt == "json":
        doc = {
            "command": command,
            "params": {k: _cell(v, True) for k, v in params.items()},
            "rows": [{c: _cell(v, True) for c, v in zip(columns, row)} for row in rows],
        }
        return json.dumps(doc, indent=2) + "\n"
    cells = [[_cell(v, False) for v in row] for row in rows]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        w.writerows(cells)
        return buf.getvalue()
    widths = [max([len(c)] + [len(r[i]) for r in cells]) for i, c in enumerate(columns)]
    # numeric columns right-aligned, text columns left-aligned
    numeric = [all(_NUMERIC.fullmatch(r[i]) for r in cells) for i in range(len(columns))]

    def line(vals):
        return "  ".join(
            v.rjust(wd) if num else v.ljust(wd) for v, wd, num in zip(vals, widths, numeric)
        ).rstrip()

    return "\n".join([line(columns)] + [line(r) for r in cells]) + "\n"


def _selector(kind: str, m: int | None, parser: argparse.ArgumentParser):
    if kind in ("sym-base", "alt-base"):
        if m is not None:
            parser.error(f"--m is not accepted for {kind}")
        return SYM_BASE if kind == "sym-base" else ALT_BASE
    if m is None or m < 1:
        parser.error(f"{kind} needs --m >= 1")
    return GroupSpec(Kind(kind), m)


def cmd_coeffs(args, parser) -> int:
    if args.order < 0:
        parser.error("--order must be >= 0")
    sel = _selector(args.kind, args.m, parser)
    s = growth_series(sel, args.order).integers()
    rows = [(n, c) for n, c in enumerate(s)]
    params = {"kind": args.kind, "m": args.m, "order": args.order}
    sys.stdout.write(render("coeffs", params, ["n", "gamma"], rows, args.format))
    return 0


def cmd_ratio_table(args, parser) -> int:
    if any(n < 1 for n in args.rows):
        parser.error("rows must be >= 1")
    if args.ms < 1 or args.ma < 1:
        parser.error("--ms and --ma must be >= 1")
    order = max(args.rows)
    s = growth_series(GroupSpec(Kind.SYM, args.ms), order).integers()
    a = growth_series(GroupSpec(Kind.ALT, args.ma), order).integers()
    rows = [(n, s[n], a[n], significant(Fraction(s[n], a[n]))) for n in args.rows]
    params = {"ms": args.ms, "ma": args.ma, "rows": list(args.rows)}
    sys.stdout.write(render("ratio-table", params, ["n", "gamma_sym", "gamma_alt", "ratio"], rows, args.format))
    return 0


def cmd_hooks(args, parser) -> int:
    if not args.parts or not is_partition(args.parts):
        parser.error("parts must be positive and weakly decreasing")
    hooks = hook_lengths(args.parts)
    if args.format == "text":
        sys.stdout.write("".join(" ".join(map(str, r)) + "\n" for r in hooks))
    else:
        rows = [(i, r) for i, r in enumerate(hooks, start=1)]
        sys.stdout.write(render("hooks", {"parts": list(args.parts)}, ["row", "hooks"], rows, args.format))
    return 0


def cmd_fhat(args, parser) -> int:
    if not 2 <= args.n <= FHAT_MAX_N:
        parser.error(f"n must lie in 2..{FHAT_MAX_N}")
    poly = fhat_polynomial(args.n)
    if args.format == "text":
        sys.stdout.write(str(poly) + "\n")
    else:
        rows = [(c, list(e)) for e, c in poly.terms]
        sys.stdout.write(render("fhat", {"n": args.n}, ["coefficient", "exponents"], rows, args.format))
    return 0


def cmd_asympt(args, parser) -> int:
    if args.generic:
        try:
            e = tuple(int(x) for x in args.generic.split(","))
            d = asy.cdf_params(e).d
        except ValueError as exc:
            parser.error(f"--generic: {exc}")
        label = {"generic": ",".join(map(str, e))}
    else:
        if args.kind not in ("sym", "alt"):
            parser.error("give a kind (sym or alt) or --generic")
        g = _selector(args.kind, args.m, parser)
        d = 1
        label = {"kind": args.kind, "m": args.m}
    if args.index is not None:
        if args.index < 1 or args.index % d:
            parser.error(f"series index {args.index} is not a positive multiple of d={d}")
        n, index = args.index // d, args.index
    else:
        if args.n is None or args.n < 1:
            parser.error("--n must be >= 1")
        n, index = args.n, args.n * d
    est = asy.cdf_estimate(e, n) if args.generic else asy.estimate(g, n)
    columns = ["n", "index", "log_estimate", "estimate"]
    row: list[Any] = [n, index, est.log, est.value if est.value is not None else "overflow"]
    if args.with_exact:
        if index > EXACT_MAX_ORDER:
            parser.error(f"--with-exact supports series index <= {EXACT_MAX_ORDER}")
        series = generalized_partition_series(e, index) if args.generic else growth_series(g, index)
        exact = series.integers()[index]
        columns += ["exact", "ratio"]
        row += [exact, math.exp(est.log - math.log(exact))]
    params = {**label, "n": n, "index": index, "with_exact": bool(args.with_exact)}
    sys.stdout.write(render("asympt", params, columns, [row], args.format))
    return 0


def cmd_hooksum(args, parser) -> int:
    try:
        r = Fraction(args.r)
    except ValueError:
        parser.error(f"--r must be a rational number, got {args.r!r}")
    if args.n < 0 or args.threads < 1:
        parser.error("--n must be >= 0 and --threads >= 1")
    v = no_coefficient(r, args.n, threads=args.threads)
    sys.stdout.write(render("hooksum", {"r": r, "n": args.n}, ["n", "value"], [(args.n, v)], args.format))
    return 0


def cmd_verify(args, parser) -> int:
    if args.threads < 1:
        parser.error("--threads must be >= 1")
    results = run_checks(args.level, threads=args.threads)
    for r in results:
        print(f"{r.name}: {r.seconds:.2f}s", file=sys.stderr)
    rows = [(r.name, "PASS" if r.passed else "FAIL", r.detail) for r in results]
    sys.stdout.write(render("verify", {"level": args.level}, ["check", "status", "detail"], rows, args.format))
    failed = [r.name for r in results if not r.passed]
    if failed:
        print("failed: " + ", ".join(failed), file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wreathgrowth",
        description="Conjugacy growth series of wreath products with finitary Sym(X) / Alt(X).",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["text", "csv", "json"], default="text")

    p = sub.add_parser("coeffs", parents=[fmt], help="growth series coefficients gamma(0..N)")
    p.add_argument("kind", choices=["sym-base", "alt-base", "sym", "alt"])
    p.add_argument("--m", type=int, help="number of conjugacy classes of H")
    p.add_argument("--order", type=int, default=10)
    p.set_defaults(func=cmd_coeffs, subparser=p)

    p = sub.add_parser("ratio-table", parents=[fmt], help="gamma_Sym(n)/gamma_Alt(n) table")
    p.add_argument("--ms", type=int, default=10)
    p.add_argument("--ma", type=int, default=5)
    p.add_argument("--rows", type=int, nargs="+", default=list(TABLE_ROWS))
    p.set_defaults(func=cmd_ratio_table, subparser=p)

    p = sub.add_parser("hooks", parents=[fmt], help="hook lengths of a partition")
    p.add_argument("parts", type=int, nargs="+")
    p.set_defaults(func=cmd_hooks, subparser=p)

    p = sub.add_parser("fhat", parents=[fmt], help="explicit F-hat_n polynomial")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_fhat, subparser=p)

    p = sub.add_parser("asympt", parents=[fmt], help="leading-order asymptotic estimate")
    p.add_argument("kind", nargs="?", choices=["sym", "alt"])
    p.add_argument("--m", type=int)
    p.add_argument("--generic", help="comma-separated exponent vector e1,e2,...")
    where = p.add_mutually_exclusive_group()
    where.add_argument("--n", type=int, help="reduced index (estimate targets q^(d*n))")
    where.add_argument("--index", type=int, help="series index; must be a multiple of d")
    p.add_argument("--with-exact", action="store_true")
    p.set_defaults(func=cmd_asympt, subparser=p)

    p = sub.add_parser("hooksum", parents=[fmt], help="hook-product sum [q^n] prod (1-q^k)^r")
    p.add_argument("--r", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_hooksum, subparser=p)

    p = sub.add_parser("verify", parents=[fmt], help="run the cross-verification suite")
    p.add_argument("level", nargs="?", choices=["quick", "full"], default="quick")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_verify, subparser=p)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, args.subparser)


if __name__ == "__main__":
    sys.exit(main())
