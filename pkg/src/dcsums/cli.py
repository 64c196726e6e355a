"""Command-line front end: exact sums, certified evaluations, verification.

Four subcommands:

  sum     print one exact rational (dedekind | apostol | dc | s5 | y)
  eval    print one certified decimal value with its error bound
  verify  run an identity suite and emit its report (plain, csv, or json)
  table   print the classical reciprocity table over a coprime grid

Exact rationals always print untruncated as ``num/den``.  Certified values
print only the digits their bound justifies, followed by ``± <bound`` (or
``± 0`` when the value is exact).  Angles are given as one or two integers
``p [q]`` meaning (p/q)*pi; unreduced fractions are accepted and reduced.
Exit status: 0 on success, 1 when a verify suite produces an unexpected
verdict, 2 on bad input or an unwritable destination (with a one-line
diagnostic on stderr).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from .precision import Angle, AnglePoleError, PrecReal
from .series import (
    apostol_series,
    bernoulli_function_series,
    clausen,
    dc_sum_clausen,
    dc_sum_gseries,
    dc_sum_hurwitz,
    dc_sum_polylog,
    dc_sum_series_tan,
    dirichlet_beta,
    dirichlet_eta,
    dirichlet_lambda,
    euler_function_series,
    hurwitz_zeta,
    sc_function,
    sign_char_series,
)
from .sums import apostol_sum, dc_sum, dedekind_reciprocity_case, dedekind_sum, hardy_s5, y_sum
from .verify import GridSpec, SUITES, _sci_upper, emit_report, run_suite, suite_passes

__all__ = ["CliConfig", "main", "cmd_sum", "cmd_eval", "cmd_verify", "cmd_table"]


@dataclass(frozen=True)
class CliConfig:
    """Validated run parameters shared by all subcommands."""

    precision_bits: int = 128
    output_format: str = "plain"
    k_max: int = 9
    y_max: int = 2
    suite: str = "all"
    out_path: Optional[str] = None

    def __post_init__(self):
        if not isinstance(self.precision_bits, int) or self.precision_bits < 32:
            raise ValueError("precision must be at least 32 bits")
        if self.output_format not in ("csv", "json", "plain"):
            raise ValueError("format must be 'csv', 'json', or 'plain'")
        if self.k_max < 1 or self.y_max < 1:
            raise ValueError("grid bounds must be at least 1")


# ---------------------------------------------------------------------------
# sum: exact rationals
# ---------------------------------------------------------------------------

SUM_KINDS = ("dedekind", "apostol", "dc", "s5", "y")


def cmd_sum(kind: str, order: Optional[int], h: int, k: int) -> str:
    """Exact rational for one finite sum, rendered num/den."""
    if kind == "dedekind":
        v = dedekind_sum(h, k)
    elif kind == "apostol":
        v = apostol_sum(_required_order(order), h, k)
    elif kind == "dc":
        v = dc_sum(_required_order(order), h, k)
    elif kind == "s5":
        v = hardy_s5(h, k)
    elif kind == "y":
        v = y_sum(h, k)
    else:
        raise ValueError(f"kind must be one of {', '.join(SUM_KINDS)}")
    return f"{v.numerator}/{v.denominator}"


def _required_order(order: Optional[int]) -> int:
    if order is None:
        raise ValueError("--order is required for this kind")
    return order


# ---------------------------------------------------------------------------
# eval: certified decimals
# ---------------------------------------------------------------------------


def _need(args, *names):
    got = []
    for name in names:
        v = getattr(args, name.replace("-", "_"), None)
        if v is None:
            raise ValueError(f"--{name} is required for this function")
        got.append(v)
    return got


def _angle_of(args) -> Angle:
    if args.angle is None:
        raise ValueError("--angle is required for this function")
    if len(args.angle) == 1:
        return Angle(args.angle[0])
    if len(args.angle) == 2:
        return Angle(args.angle[0], args.angle[1])
    raise ValueError("--angle takes one or two integers p [q], meaning (p/q)*pi")


def _ev_lambda(args, prec):
    (s,) = _need(args, "s")
    return dirichlet_lambda(s, prec)


def _ev_eta(args, prec):
    (s,) = _need(args, "s")
    return dirichlet_eta(s, prec)


def _ev_beta(args, prec):
    (s,) = _need(args, "s")
    return dirichlet_beta(s, prec)


def _ev_hurwitz(args, prec):
    s, a = _need(args, "s", "a")
    return hurwitz_zeta(s, a, prec)


def _ev_clausen(args, prec):
    (n,) = _need(args, "n")
    return clausen(n, _angle_of(args), prec)


def _ev_sc_sine(args, prec):
    (s,) = _need(args, "s")
    return sc_function("S", s, _angle_of(args), 0, prec)


def _ev_sc_cosine(args, prec):
    (s,) = _need(args, "s")
    return sc_function("C", s, _angle_of(args), 0, prec)


def _ev_sign_char(args, prec):
    (a,) = _need(args, "a")
    return sign_char_series(a, prec)


def _ev_euler_series(args, prec):
    order, a = _need(args, "order", "a")
    return euler_function_series(order, a, 0, prec).result


def _ev_bernoulli_series(args, prec):
    order, a = _need(args, "order", "a")
    return bernoulli_function_series(order, a, prec)


def _ev_apostol_series(args, prec):
    order, h, k = _need(args, "order", "h", "k")
    return apostol_series(order, h, k, prec).re


def _ev_dc_tan(args, prec):
    y, h, k = _need(args, "order", "h", "k")
    return dc_sum_series_tan(y, h, k, precision=prec).result


def _ev_dc_hurwitz(args, prec):
    y, h, k = _need(args, "order", "h", "k")
    return dc_sum_hurwitz(y, h, k, prec)


def _ev_dc_clausen(parity):
    def run(args, prec):
        y, h, k = _need(args, "order", "h", "k")
        return dc_sum_clausen(parity, y, h, k, None, prec).result

    return run


def _ev_dc_polylog(parity):
    def run(args, prec):
        y, h, k = _need(args, "order", "h", "k")
        return dc_sum_polylog(parity, y, h, k, prec).result

    return run


def _ev_dc_gseries(args, prec):
    y, h, k = _need(args, "order", "h", "k")
    return dc_sum_gseries(y, h, k, prec).result


EVAL_FUNCTIONS = {
    "lambda": _ev_lambda,
    "eta": _ev_eta,
    "beta": _ev_beta,
    "hurwitz-zeta": _ev_hurwitz,
    "clausen": _ev_clausen,
    "sc-sine": _ev_sc_sine,
    "sc-cosine": _ev_sc_cosine,
    "sign-char": _ev_sign_char,
    "euler-series": _ev_euler_series,
    "bernoulli-series": _ev_bernoulli_series,
    "apostol-series": _ev_apostol_series,
    "dc-tan": _ev_dc_tan,
    "dc-hurwitz": _ev_dc_hurwitz,
    "dc-clausen-odd": _ev_dc_clausen("odd"),
    "dc-clausen-even": _ev_dc_clausen("even"),
    "dc-polylog-odd": _ev_dc_polylog("odd"),
    "dc-polylog-even": _ev_dc_polylog("even"),
    "dc-gseries": _ev_dc_gseries,
}


def format_ball(v: PrecReal) -> str:
    """Decimal digits the bound justifies, then the bound itself."""
    if v.is_exact:
        return f"{v.decimal()} ± 0"
    return f"{v.decimal()} ± <{_sci_upper(v.error_fraction())}"


def cmd_eval(name: str, args, precision: int) -> str:
    fn = EVAL_FUNCTIONS.get(name)
    if fn is None:
        known = ", ".join(sorted(EVAL_FUNCTIONS))
        raise ValueError(f"unknown function '{name}'; available: {known}")
    return format_ball(fn(args, precision))


# ---------------------------------------------------------------------------
# verify: suites and reports
# ---------------------------------------------------------------------------


def _plain_report(reports) -> str:
    from .verify import _row

    lines = []
    for r in reports:
        row = _row(r)
        head = f"[{row['verdict']}] {row['identity_id']}"
        if row["params"]:
            head += f" {row['params']}"
        if row["lhs"] or row["rhs"]:
            head += f": lhs={row['lhs']} rhs={row['rhs']}"
            head += f" residual={row['residual']} bound={row['abs_bound']}"
        if row["convention_origin"] != "":
            head += f" convention=({row['convention_origin']},{row['convention_sign']})"
        lines.append(head)
    return "\n".join(lines) + "\n"


def cmd_verify(config: CliConfig) -> tuple[str, int]:
    """Run the selected suite(s); exit 0 only when every verdict is expected."""
    suites = SUITES if config.suite == "all" else (config.suite,)
    grid = GridSpec(config.k_max, config.y_max)
    reports = []
    for suite in suites:
        reports.extend(run_suite(suite, grid, config.precision_bits))
    if config.output_format == "plain":
        text = _plain_report(reports)
    else:
        text = emit_report(reports, config.output_format)
    return text, (0 if suite_passes(reports) else 1)


# ---------------------------------------------------------------------------
# table: classical reciprocity over a grid
# ---------------------------------------------------------------------------

TABLE_COLUMNS = ("h", "k", "s_hk", "s_kh", "lhs", "rhs", "residual")


def cmd_table(config: CliConfig) -> str:
    rows = []
    for k in range(2, config.k_max + 1):
        for h in range(1, k):
            if gcd(h, k) != 1:
                continue
            case = dedekind_reciprocity_case(h, k)
            rows.append({
                "h": str(h),
                "k": str(k),
                "s_hk": _rat(dedekind_sum(h, k)),
                "s_kh": _rat(dedekind_sum(k, h)),
                "lhs": _rat(case.lhs),
                "rhs": _rat(case.rhs),
                "residual": _rat(case.residual),
            })
    if config.output_format == "json":
        return json.dumps(rows, indent=2) + "\n"
    if config.output_format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=TABLE_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
    lines = ["\t".join(TABLE_COLUMNS)]
    lines += ["\t".join(row[c] for c in TABLE_COLUMNS) for row in rows]
    return "\n".join(lines) + "\n"


def _rat(v: Fraction) -> str:
    return f"{v.numerator}/{v.denominator}"


# ---------------------------------------------------------------------------
# argument parsing and dispatch
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prec", type=int, default=128, metavar="BITS",
                        help="working precision in bits (default 128, min 32)")

    parser = argparse.ArgumentParser(
        prog="dcsums",
        description="Exact Dedekind-type alternating sums and their certified series forms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sum = sub.add_parser("sum", parents=[common],
                           help="print one exact sum as num/den")
    p_sum.add_argument("kind", choices=SUM_KINDS)
    p_sum.add_argument("--order", type=int, help="order m (apostol, dc)")
    p_sum.add_argument("--h", type=int, required=True)
    p_sum.add_argument("--k", type=int, required=True)

    p_eval = sub.add_parser("eval", parents=[common],
                            help="print one certified decimal with its bound")
    p_eval.add_argument("name", help="function name (see diagnostics for the list)")
    p_eval.add_argument("--s", type=int, help="series exponent")
    p_eval.add_argument("--n", type=int, help="order of the Clausen kernel")
    p_eval.add_argument("--order", type=int, help="order of the sum or kernel")
    p_eval.add_argument("--a", type=Fraction, help="rational argument, e.g. 2/3")
    p_eval.add_argument("--h", type=int)
    p_eval.add_argument("--k", type=int)
    p_eval.add_argument("--angle", type=int, nargs="+", metavar="INT",
                        help="angle p [q] meaning (p/q)*pi")

    p_verify = sub.add_parser("verify", parents=[common],
                              help="run an identity suite and report verdicts")
    p_verify.add_argument("suite", choices=SUITES + ("all",))
    p_verify.add_argument("--k-max", type=int, default=9, dest="k_max")
    p_verify.add_argument("--y-max", type=int, default=2, dest="y_max")
    p_verify.add_argument("--format", choices=("csv", "json", "plain"),
                          default="plain")
    p_verify.add_argument("--out", metavar="PATH", help="write the report here")

    p_table = sub.add_parser("table", parents=[common],
                             help="classical reciprocity table over coprime pairs")
    p_table.add_argument("--k-max", type=int, default=9, dest="k_max")
    p_table.add_argument("--format", choices=("csv", "json", "plain"),
                         default="plain")
    p_table.add_argument("--out", metavar="PATH", help="write the table here")

    return parser


def _deliver(text: str, out_path: Optional[str]) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def main(argv: Optional[list] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "sum":
            config = CliConfig(precision_bits=args.prec)
            print(cmd_sum(args.kind, args.order, args.h, args.k))
            return 0
        if args.command == "eval":
            config = CliConfig(precision_bits=args.prec)
            print(cmd_eval(args.name, args, config.precision_bits))
            return 0
        if args.command == "verify":
            config = CliConfig(
                precision_bits=args.prec,
                output_format=args.format,
                k_max=args.k_max,
                y_max=args.y_max,
                suite=args.suite,
                out_path=args.out,
            )
            text, status = cmd_verify(config)
            _deliver(text, config.out_path)
            return status
        if args.command == "table":
            config = CliConfig(
                precision_bits=args.prec,
                output_format=args.format,
                k_max=args.k_max,
                out_path=args.out,
            )
            _deliver(cmd_table(config), config.out_path)
            return 0
        raise ValueError(f"unknown command {args.command!r}")
    except (ValueError, AnglePoleError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
