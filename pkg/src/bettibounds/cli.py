"""Command-line interface.

Exit codes: 0 = success or all checks passed; 1 = a mathematical finding
(a violated bound, a diagram outside the decomposable cone); 2 = usage or
input error.  Errors print one machine-parsable line on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .asymptotic import PowerBoundParams, bound_vs_pure, exact_lower_bound, leading_bound
from .beh import SCAN_MODES, beh_check, pure_beh_check, scan
from .decompose import decompose, validate_bounds
from .diagram import BettiDiagram, check_degree_sequence, format_rational
from .errors import BettiError, FormatError, NotInConeError
from .monomial import MonomialIdeal, corpus, taylor_betti
from .pure import (
    herzog_kuhl,
    verify_binomial_floor,
    verify_first_gap_monotone,
    verify_inward_shift_monotone,
)

EXIT_OK = 0
EXIT_FINDING = 1
EXIT_USAGE = 2


def _error_slug(exc: BettiError) -> str:
    name = type(exc).__name__
    if name.endswith("Error"):
        name = name[: -len("Error")]
    out = []
    for ch in name:
        if ch.isupper() and out:
            out.append("-")
        out.append(ch.lower())
    return "".join(out)


def _parse_degrees(text: str):
    try:
        return check_degree_sequence(tuple(int(x) for x in text.split(",")))
    except ValueError:
        raise FormatError(f"cannot parse degree sequence {text!r}") from None


def _read_diagram(path: str) -> BettiDiagram:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    return BettiDiagram.from_json(text)


def _print_diagram(diagram: BettiDiagram, fmt: str):
    if fmt == "json":
        print(diagram.to_json())
    else:
        print(diagram.table())


def _print_beh_report(report, fmt: str, heading=None):
    if fmt == "json":
        print(report.to_json())
        return
    if heading:
        print(heading)
    print(f"codim: {report.codim}")
    print(f"beta0: {format_rational(report.beta0)}")
    print(f"hypothesis met: {'true' if report.hypothesis_met else 'false'}")
    for note in report.notes:
        print(f"note: {note}")
    for check in report.per_j:
        relation = ">=" if check.passed else "<"
        print(f"j={check.j}: {format_rational(check.actual)} {relation} {format_rational(check.required)}")
    print(f"overall: {'PASS' if report.overall else 'FAIL'}")


def _cmd_pure(args) -> int:
    pure = herzog_kuhl(_parse_degrees(args.degrees))
    _print_diagram(pure.diagram, args.format)
    return EXIT_OK


def _cmd_decompose(args) -> int:
    diagram = _read_diagram(args.file)
    decomposition = decompose(diagram)
    if args.format == "json":
        print(decomposition.to_json())
    else:
        print("coefficient  degrees")
        for coefficient, degrees in decomposition:
            print(f"{format_rational(coefficient)}  {','.join(str(d) for d in degrees)}")
    if args.validate:
        report = validate_bounds(decomposition, diagram)
        print(f"bounds: {'PASS' if report.passed else 'FAIL'}", file=sys.stderr)
        if not report.passed:
            return EXIT_FINDING
    return EXIT_OK


def _cmd_check_beh(args) -> int:
    diagram = _read_diagram(args.file)
    report = beh_check(diagram, codim=args.codim)
    _print_beh_report(report, args.format)
    return EXIT_OK if report.overall else EXIT_FINDING


def _cmd_check_pure(args) -> int:
    degrees = _parse_degrees(args.degrees)
    report = pure_beh_check(degrees)
    heading = f"degrees: {','.join(str(d) for d in degrees)}"
    _print_beh_report(report, args.format, heading=heading)
    return EXIT_OK if report.overall else EXIT_FINDING


def _cmd_scan(args) -> int:
    report = scan(range(args.s_min, args.s_max + 1), args.d_max, args.mode)
    print(report.to_csv())
    print(report.summary(), file=sys.stderr)
    return EXIT_FINDING if report.findings else EXIT_OK


def _cmd_asymptotic(args) -> int:
    tail = None
    if args.e_tail is not None:
        try:
            tail = tuple(int(x) for x in args.e_tail.split(",")) if args.e_tail else ()
        except ValueError:
            raise FormatError(f"cannot parse gap tail {args.e_tail!r}") from None
    rows = []
    for t in range(1, args.t_max + 1):
        params = PowerBoundParams(args.codim, args.delta, args.defect, args.j, t)
        if tail is None:
            rows.append(
                {
                    "t": t,
                    "leading": format_rational(leading_bound(params)),
                    "exact": format_rational(exact_lower_bound(params)),
                }
            )
        else:
            comparison = bound_vs_pure(params, tail)
            rows.append(
                {
                    "t": t,
                    "leading": format_rational(comparison.leading_value),
                    "exact": format_rational(comparison.exact_bound),
                    "pure": format_rational(comparison.pure_value),
                }
            )
    if args.format == "json" or args.json:
        print(json.dumps({"rows": rows}))
    else:
        columns = list(rows[0].keys())
        widths = {c: max(len(c), *(len(str(r[c])) for r in rows)) for c in columns}
        print("  ".join(c.rjust(widths[c]) for c in columns))
        for row in rows:
            print("  ".join(str(row[c]).rjust(widths[c]) for c in columns))
    return EXIT_OK


def _cmd_verify_lemmas(args) -> int:
    reports = [
        verify_first_gap_monotone(args.s_max, args.samples, args.seed),
        verify_inward_shift_monotone(args.s_max, args.samples, args.seed),
        verify_binomial_floor(args.s_max, args.samples, args.seed),
    ]
    if args.format == "json":
        print(json.dumps({"reports": [r.to_json_dict() for r in reports]}))
    else:
        for report in reports:
            print(report.summary())
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FINDING


def _cmd_monomial_betti(args) -> int:
    if args.family:
        ideal = corpus(args.family)
    else:
        try:
            text = Path(args.file).read_text(encoding="utf-8")
        except OSError as exc:
            raise FormatError(f"cannot read {args.file}: {exc}") from exc
        ideal = MonomialIdeal.from_json(text)
    _print_diagram(taylor_betti(ideal), args.format)
    return EXIT_OK


def _add_format(parser):
    parser.add_argument("--format", choices=("table", "json"), default="table")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="betti",
        description="Exact Betti-diagram toolkit: pure diagrams, cone decomposition, "
        "binomial rank bounds, and monomial-ideal resolutions.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pure", help="normalized pure diagram of a degree sequence")
    p.add_argument("--degrees", required=True, help="comma-separated, e.g. 0,1,2,4")
    _add_format(p)
    p.set_defaults(func=_cmd_pure)

    p = sub.add_parser("decompose", help="greedy decomposition of a diagram file")
    p.add_argument("file", help="diagram JSON file")
    p.add_argument("--validate", action="store_true", help="also check support bounds")
    _add_format(p)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("check-beh", help="binomial rank bound on a diagram file")
    p.add_argument("file", help="diagram JSON file")
    p.add_argument("--codim", type=int, default=None, help="override the computed codimension")
    _add_format(p)
    p.set_defaults(func=_cmd_check_beh)

    p = sub.add_parser("check-pure", help="binomial rank bound on a pure diagram")
    p.add_argument("--degrees", required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_check_pure)

    p = sub.add_parser("scan", help="enumerate degree sequences and check bounds")
    p.add_argument("--s-min", type=int, default=1)
    p.add_argument("--s-max", type=int, required=True)
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--mode", choices=SCAN_MODES, required=True)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("asymptotic", help="lower bounds for powers of an ideal")
    p.add_argument("--codim", type=int, required=True)
    p.add_argument("--delta", type=int, required=True, help="generation degree")
    p.add_argument("--defect", type=int, required=True, help="asymptotic regularity defect")
    p.add_argument("--j", type=int, required=True, help="column index")
    p.add_argument("--t-max", type=int, required=True, help="tabulate powers 1..t_max")
    p.add_argument(
        "--e-tail",
        default=None,
        help="comma-separated integer gap tail; adds the pure-diagram column",
    )
    p.add_argument("--json", action="store_true", help="shorthand for --format json")
    _add_format(p)
    p.set_defaults(func=_cmd_asymptotic)

    p = sub.add_parser("verify-lemmas", help="seeded sign checks on column-total derivatives")
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--s-max", type=int, default=8)
    _add_format(p)
    p.set_defaults(func=_cmd_verify_lemmas)

    p = sub.add_parser("monomial-betti", help="Betti diagram of a monomial quotient")
    p.add_argument("file", nargs="?", help="ideal JSON file")
    p.add_argument("--family", default=None, help='e.g. "power-of-maximal(2,2)"')
    _add_format(p)
    p.set_defaults(func=_cmd_monomial_betti)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "monomial-betti" and bool(args.file) == bool(args.family):
        print("error: usage: provide exactly one of FILE or --family", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except NotInConeError as exc:
        print(f"error: {_error_slug(exc)}: {exc}", file=sys.stderr)
        return EXIT_FINDING
    except BettiError as exc:
        print(f"error: {_error_slug(exc)}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
