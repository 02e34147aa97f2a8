"""Command-line front end.

Exit codes: 0 success, 1 a verified identity failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import tensor_chern as tc
from .errors import DomainError, OracleLimitError
from .lr_rule import lr_coefficient
from .partitions import Partition, format_partition, parse_partition
from .suites import SUITES, run_suite

METHODS = ("def", "lascoux", "rectangle", "shifted", "reduction")


class UsageError(Exception):
    pass


def _partition_arg(text: str) -> Partition:
    try:
        return parse_partition(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rank_range(text: str) -> range:
    try:
        lo, hi = (int(x) for x in text.split(".."))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"bad rank range {text!r}")
    return range(lo, hi + 1)


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tensorchern",
        description="Chern and Segre classes of tensor products in the Schur basis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    coeff = sub.add_parser("coeff", help="print P (or Q) for a pair of partitions")
    coeff.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    coeff.add_argument("--mu", type=_partition_arg, required=True)
    coeff.add_argument("--e", type=int)
    coeff.add_argument("--f", type=int)
    coeff.add_argument("--method", choices=METHODS, default="def")
    coeff.add_argument("--segre", action="store_true", help="Segre coefficient Q instead of P")
    coeff.add_argument("--m", type=_positive, help="reduced rank for --method reduction")
    coeff.add_argument("--p", type=_positive, help="reduced rank for --method reduction")

    for kind in ("chern", "segre"):
        table = sub.add_parser(kind, help=f"{kind} expansion of E (x) F at given ranks")
        table.add_argument("--e", type=_positive, required=True)
        table.add_argument("--f", type=_positive, required=True)
        table.add_argument("--max-degree", type=_nonnegative, default=4)
        table.add_argument("--format", choices=("text", "json"), default="text")
        table.add_argument("--include-vanishing", action="store_true",
                           help="keep pairs whose Schur classes vanish at these ranks")
        table.add_argument("--verbose", action="store_true", help="also list zero coefficients")

    lr = sub.add_parser("lr", help="Littlewood-Richardson coefficient c^nu_{lambda,mu}")
    lr.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    lr.add_argument("--mu", type=_partition_arg, required=True)
    lr.add_argument("--nu", type=_partition_arg, required=True)

    verify = sub.add_parser("verify", help="run identity verification suites")
    verify.add_argument("--suite", choices=("all",) + SUITES, default="all")
    verify.add_argument("--max-weight", type=_nonnegative, default=4)
    verify.add_argument("--rank-range", type=_rank_range, default=range(1, 4))
    verify.add_argument("--jobs", type=_positive, default=1)
    return parser


def _coeff(args) -> str:
    lam, mu, method = args.lam, args.mu, args.method
    have_ranks = args.e is not None and args.f is not None
    if (args.e is None) != (args.f is None):
        raise UsageError("--e and --f must be given together")
    if args.segre:
        if method != "def":
            raise UsageError("--segre supports only --method def")
        poly = tc.q_coefficient_symbolic(lam, mu)
        return str(poly.evaluate(args.e, args.f) if have_ranks else poly)
    if method == "def":
        poly = tc.p_coefficient_symbolic(lam, mu)
        return str(poly.evaluate(args.e, args.f) if have_ranks else poly)
    if not have_ranks:
        raise UsageError(f"--method {method} needs --e and --f")
    if method == "lascoux":
        value = tc.p_via_lascoux(lam, mu, args.e, args.f)
    elif method == "rectangle":
        value = tc.p_via_rectangle(lam, mu, args.e, args.f)
    elif method == "shifted":
        value = tc.p_via_shifted_schur(lam, mu, args.e, args.f)
    else:
        m = args.m if args.m is not None else max(1, len(lam))
        p = args.p if args.p is not None else max(1, len(mu))
        value = tc.p_via_reduction(lam, mu, args.e, args.f, m, p)
    return str(value)


def render_expansion_text(expansion: tc.SchurPairExpansion) -> str:
    lines = [f"{expansion.kind} e={expansion.e} f={expansion.f} max_degree={expansion.max_degree}"]
    for (lam, mu), coeff in expansion.items():
        lines.append(f"[{format_partition(lam)}]\t[{format_partition(mu)}]\t{coeff}")
    return "\n".join(lines)


def render_expansion_json(expansion: tc.SchurPairExpansion) -> str:
    return json.dumps(expansion.to_json(), indent=2)


def _table(args) -> str:
    build = tc.chern_expansion if args.command == "chern" else tc.segre_expansion
    expansion = build(args.e, args.f, args.max_degree,
                      include_vanishing=args.include_vanishing, include_zero=args.verbose)
    if args.format == "json":
        return render_expansion_json(expansion)
    return render_expansion_text(expansion)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "coeff":
            print(_coeff(args))
        elif args.command in ("chern", "segre"):
            print(_table(args))
        elif args.command == "lr":
            print(lr_coefficient(args.lam, args.mu, args.nu))
        else:
            report = run_suite(args.suite, args.max_weight, args.rank_range, args.jobs)
            print(report.render())
            return 0 if report.passed else 1
    except (UsageError, DomainError, OracleLimitError) as exc:
        print(f"tensorchern: error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
