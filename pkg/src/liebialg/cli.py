"""Command-line interface.

``liebialg SUBCOMMAND SOURCE [--at NAME=RATIONAL ...] [--format text|json] [--strict]``

SOURCE is a catalog identifier (``lorentzian-2+1``, ``lorentzian-3+1``) or a
path to a JSON problem document.  Exit status: 0 success, 1 a checked
condition is false and ``--strict`` was given, 2 invalid input.
"""
from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from .bialgebra import CocycleError, CoJacobiError
from .catalog import CATALOG, get_entry
from .problem import ProblemError, document_from_entry, load_problem
from .report import (
    InputError,
    check_report,
    dualize_report,
    fixtures_report,
    geometry_report,
    metric_report,
    scan_report,
)
from .scalar import SubstitutionError

__all__ = ["main", "run_command", "build_parser", "resolve_source"]

_COMMANDS = {
    "check": (check_report, "coisotropy, coreductivity and cosymmetry verdicts"),
    "dualize": (dualize_report, "dual bracket, dual cocommutator and dual splitting"),
    "geometry": (geometry_report, "canonical torsion, curvature, Ricci and invariant metrics of the dual space"),
    "metric": (metric_report, "invariant metrics on the dual space"),
    "scan-r": (scan_report, "constraints each condition puts on a generic r-matrix"),
}


def _binding(text):
    name, sep, value = text.partition("=")
    if not sep or not name.strip():
        raise argparse.ArgumentTypeError(f"expected NAME=RATIONAL, got {text!r}")
    try:
        return name.strip(), Fraction(value.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {value!r}") from None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--at", action="append", type=_binding, default=[], metavar="NAME=RATIONAL",
                        help="substitute a parameter value (repeatable); for scan-r, also re-reduce there")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--strict", action="store_true", help="exit 1 when a checked condition is false")

    p = _Parser(prog="liebialg", description="Exact Lie bialgebra duality toolkit.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (_, help_text) in _COMMANDS.items():
        sp = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        sp.add_argument("source", help=f"catalog identifier ({', '.join(CATALOG)}) or JSON file")
    fx = sub.add_parser("fixtures", parents=[common], help="run the catalog fixture suite")
    fx.add_argument("entries", nargs="*", help="catalog identifiers (default: all)")
    return p


def resolve_source(source, bindings=()):
    """A problem document for a catalog identifier or file path, with *bindings* merged in."""
    if source in CATALOG:
        doc = document_from_entry(get_entry(source))
    elif os.path.exists(source):
        doc = load_problem(source)
    else:
        raise InputError(f"{source!r} is neither a catalog identifier ({', '.join(CATALOG)}) nor a file")
    for name, value in bindings:
        if name not in doc.parameters:
            raise InputError(f"--at {name}: no such parameter (declared: {', '.join(doc.parameters) or 'none'})")
        doc.substitute[name] = value
    return doc


def run_command(argv, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "fixtures":
            names = args.entries or list(CATALOG)
            for n in names:
                if n not in CATALOG:
                    raise InputError(f"unknown catalog entry {n!r}")
            rep = fixtures_report([get_entry(n) for n in names])
            stdout.write(rep.render(args.format))
            return 0 if rep.ok else 1
        func = _COMMANDS[args.command][0]
        if args.command == "scan-r":
            doc = resolve_source(args.source)
            rep = scan_report(doc, [{k: v} for k, v in args.at] if args.at else [])
        else:
            doc = resolve_source(args.source, args.at)
            rep = func(doc)
    except (ProblemError, InputError, CocycleError, CoJacobiError, SubstitutionError, ValueError) as exc:
        print(f"liebialg: error: {exc}", file=stderr)
        return 2
    stdout.write(rep.render(args.format))
    return 1 if args.strict and not rep.ok else 0


def main():
    raise SystemExit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
