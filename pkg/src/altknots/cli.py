"""``altknots`` command line.

Exit status: 0 on success, 1 on a usage or parse error, 2 when the answer
is inconclusive or needs invariant data that is not available.
"""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction

from .concordance import (
    MissingInvariantData,
    ag_lower_bound,
    alternating_obstruction,
    deltan_report,
    expr_upsilon,
    independence_certificate,
)
from .parse import ParseError, parse_expr
from .render import breakpoints_text, csv_text, svg_text
from .seifert import SeifertError
from .upsilon import NotCoprime

EXIT_OK, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _positive_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        n = 0
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--matrix-dir", default=None, help="directory for relative M(path) atoms")
    common.add_argument("--digits", type=_positive_int, default=6, help="significant digits in decimal output")

    p = _Parser(prog="altknots", description="Concordance obstructions to alternating knots.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    up = sub.add_parser("upsilon", parents=[common], help="Upsilon(t)/t of a knot expression")
    up.add_argument("expr")
    up.add_argument("--format", choices=("breakpoints", "csv", "svg"), default="breakpoints")
    up.add_argument("--grid", type=_fraction, default=Fraction(1, 120), help="CSV/SVG sample step on (0, 2]")
    up.add_argument("--output", "-o", default=None, help="write to a file instead of stdout")

    b = sub.add_parser("bound", parents=[common], help="lower bounds on A_g and A_s")
    b.add_argument("expr")

    d = sub.add_parser("deltan", parents=[common], help="report on the knot K[n]")
    d.add_argument("n", type=_positive_int)

    ind = sub.add_parser("independent", parents=[common], help="independence certificate modulo alternating knots")
    ind.add_argument("exprs", nargs="+")
    ind.add_argument("--functionals", default="auto", help="comma-separated ids such as psi[0,2/3],jump[1], or 'auto'")

    ob = sub.add_parser("obstruct", parents=[common], help="search for an alternating-knot obstruction")
    ob.add_argument("expr")
    return p


def _split_ids(text: str) -> list[str]:
    """Comma-separated ids; commas inside brackets belong to the id."""
    return [f.strip() for f in re.split(r",(?![^\[]*\])", text) if f.strip()]


def _emit(text: str, output: str | None, out) -> None:
    if output:
        with open(output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        out.write(text)


def _run(args, out) -> int:
    if args.command == "deltan":
        out.write(deltan_report(args.n).to_text())
        return EXIT_OK

    if args.command == "independent":
        knots = [parse_expr(s, args.matrix_dir) for s in args.exprs]
        funcs = "auto" if args.functionals == "auto" else _split_ids(args.functionals)
        cert = independence_certificate(knots, funcs)
        out.write(cert.to_text())
        return EXIT_OK if cert.independent else EXIT_INCONCLUSIVE

    K = parse_expr(args.expr, args.matrix_dir)
    if args.command == "upsilon":
        if args.grid <= 0 or args.grid > 2:
            raise UsageError("--grid must lie in (0, 2]")
        f = expr_upsilon(K)
        if args.format == "breakpoints":
            text = breakpoints_text(f)
        elif args.format == "csv":
            text = csv_text(f, args.grid, args.digits)
        else:
            text = svg_text(f, args.grid, title=f"Upsilon(t)/t for {K.render()}", digits=args.digits)
        _emit(text, args.output, out)
        return EXIT_OK
    if args.command == "bound":
        out.write(ag_lower_bound(K).to_text())
        return EXIT_OK
    if args.command == "obstruct":
        out.write(alternating_obstruction(K).to_text())
        return EXIT_OK
    raise UsageError(f"unknown command {args.command!r}")


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return _run(args, out)
    except UsageError as exc:
        print(exc, file=err)
        return EXIT_USAGE
    except (ParseError, NotCoprime, SeifertError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except MissingInvariantData as exc:
        print(f"missing data: {exc}", file=err)
        return EXIT_INCONCLUSIVE
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=err)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
