"""Command line front end: ``symhodge invariants | table | compare | presets``.

Exit codes: 0 on success, 2 on usage errors, 1 when ``--oracle`` finds the
generator computation and the full-group computation disagreeing.
"""

from __future__ import annotations

import argparse
import json
import sys

from .exact_algebra import FieldSpec
from .graded_basis import SurfaceHodgeData, enumerate_basis
from .invariants import (
    InvariantReport,
    invariant_dimension,
    invariant_dimension_bruteforce,
)
from .presets import PRESETS, get_preset
from .series import compare


class UsageError(Exception):
    pass


def _parse_hodge(text: str) -> tuple[int, int, int]:
    try:
        values = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected three integers A,B,C, got {text!r}")
    if len(values) != 3 or min(values) < 0:
        raise argparse.ArgumentTypeError(f"expected three non-negative integers A,B,C, got {text!r}")
    return values


def resolve_surface(args) -> SurfaceHodgeData:
    """Build Hodge data from ``--preset`` or ``--h`` plus ``--char``."""
    if args.preset and args.h:
        raise UsageError("--preset and --h are mutually exclusive")
    try:
        if args.preset:
            data = get_preset(args.preset).data
            if args.char is not None:
                data = data.with_characteristic(args.char)
            return data
        if args.h:
            h00, h10, h20 = args.h
            char = 0 if args.char is None else args.char
            return SurfaceHodgeData(h00, h10, h20, FieldSpec(char), f"h=({h00},{h10},{h20})")
    except (KeyError, ValueError) as exc:
        raise UsageError(exc.args[0]) from None
    raise UsageError("one of --preset or --h is required")


def _describe(data: SurfaceHodgeData) -> str:
    return (f"{data.label or 'surface'}: (h00,h10,h20) = {data.hodge} "
            f"over {data.field}")


def _format_element(e) -> str:
    return "(" + ",".join(f"{d}:{c}" for d, c in zip(e.composition, e.choices)) + ")"


def render_report(report: InvariantReport) -> str:
    d = report.data
    n, q = report.n, report.q
    lines = [
        _describe(d),
        f"h^{{{q},0}}(X^({n})) = h^{{{q},0}}(Hilb^{n}(X)) = {report.dimension}   [{report.method}]",
    ]
    if report.basis is not None:
        elements = enumerate_basis(d, n, q)
        lines.append(f"invariant basis ({report.dimension} vectors; slot = degree:form index):")
        for i, v in enumerate(report.basis):
            terms = [f"{x}*{_format_element(e)}" for x, e in zip(v, elements) if x]
            lines.append(f"  v{i}: " + " + ".join(terms))
    return "\n".join(lines)


def cmd_invariants(args, out) -> int:
    data = resolve_surface(args)
    if args.n is None or args.q is None:
        raise UsageError("invariants needs --n and --q")
    try:
        report = invariant_dimension(data, args.n, args.q, want_basis=args.basis)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    status = 0
    oracle = None
    if args.oracle:
        try:
            oracle = invariant_dimension_bruteforce(data, args.n, args.q)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if oracle.dimension != report.dimension:
            status = 1
    if args.json:
        payload = report.to_dict()
        if oracle is not None:
            payload["oracle_dimension"] = oracle.dimension
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        out.write(render_report(report) + "\n")
        if oracle is not None:
            out.write(f"brute-force over S_{args.n}: {oracle.dimension}\n")
        if args.preset == "supersingular-enriques" and args.q == 2 and args.n >= 2:
            out.write("note: expected h^{2,0}(Hilb^n(X)) > 1 for a supersingular Enriques surface\n")
    if status:
        sys.stderr.write(f"ORACLE MISMATCH: generators give {report.dimension}, "
                         f"full group gives {oracle.dimension}\n")
    return status


def _table_values(data: SurfaceHodgeData, n_max: int, qs: list[int]) -> list[list[int | None]]:
    return [[invariant_dimension(data, n, q).dimension if q <= 2 * n else None
             for n in range(1, n_max + 1)] for q in qs]


def cmd_table(args, out) -> int:
    data = resolve_surface(args)
    if args.n_max < 1:
        raise UsageError("--n-max must be at least 1")
    if args.q is not None:
        qs = [args.q]
    else:
        if args.q_max < 0:
            raise UsageError("--q-max must be non-negative")
        qs = list(range(args.q_max + 1))
    if any(q < 0 for q in qs):
        raise UsageError("q must be non-negative")
    values = _table_values(data, args.n_max, qs)
    if args.json:
        payload = {
            "characteristic": data.characteristic,
            "hodge": list(data.hodge),
            "label": data.label,
            "n": list(range(1, args.n_max + 1)),
            "rows": [{"q": q, "values": row} for q, row in zip(qs, values)],
        }
        out.write(json.dumps(payload, sort_keys=True) + "\n")
        return 0
    width = max(4, len(str(max((v for row in values for v in row if v is not None), default=0))) + 2)
    out.write(_describe(data) + "\n")
    out.write("h^{q,0}(Hilb^n(X)); '-' where q > 2n\n")
    out.write("q\\n".ljust(5) + "".join(str(n).rjust(width) for n in range(1, args.n_max + 1)) + "\n")
    for q, row in zip(qs, values):
        cells = "".join(("-" if v is None else str(v)).rjust(width) for v in row)
        out.write(str(q).ljust(5) + cells + "\n")
    return 0


def cmd_compare(args, out) -> int:
    data = resolve_surface(args)
    if data.characteristic == 0:
        raise UsageError("compare needs a positive characteristic (use --char P)")
    try:
        found = compare(data, args.n_max, args.q_max)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.json:
        payload = {
            "characteristic": data.characteristic,
            "hodge": list(data.hodge),
            "label": data.label,
            "n_max": args.n_max,
            "q_max": args.q_max,
            "discrepancies": [d.to_dict() for d in found],
        }
        out.write(json.dumps(payload, sort_keys=True) + "\n")
        return 0
    out.write(_describe(data) + "\n")
    if not found:
        out.write("no discrepancies with the characteristic 0 count\n")
        return 0
    out.write(f"{len(found)} discrepancies with the characteristic 0 count:\n")
    for d in found:
        out.write(f"  n={d.n} q={d.q}: char0={d.char0_value} engine={d.charp_engine_value}\n")
    return 0


def cmd_presets(args, out) -> int:
    if args.json:
        payload = [{"name": p.name, "hodge": list(p.data.hodge),
                    "characteristic": p.data.characteristic, "label": p.data.label,
                    "notes": list(p.notes)} for p in PRESETS.values()]
        out.write(json.dumps(payload, sort_keys=True) + "\n")
        return 0
    for p in PRESETS.values():
        out.write(f"{p.name}: (h00,h10,h20) = {p.data.hodge}, default char {p.data.characteristic}\n")
        for note in p.notes:
            out.write(f"    - {note}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    surface = argparse.ArgumentParser(add_help=False)
    surface.add_argument("--preset", choices=sorted(PRESETS), help="named surface")
    surface.add_argument("--h", type=_parse_hodge, metavar="A,B,C",
                         help="explicit h^{0,0},h^{1,0},h^{2,0}")
    surface.add_argument("--char", type=int, metavar="P",
                         help="characteristic (0 or a prime); overrides the preset's")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")

    parser = argparse.ArgumentParser(
        prog="symhodge",
        description="h^{q,0} of symmetric products and Hilbert schemes of points "
                    "on surfaces, in any characteristic.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", parents=[surface, common],
                       help="dimension of S_n-invariant q-forms on X^n")
    p.add_argument("--n", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--basis", action="store_true", help="print an invariant basis")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check against the full-group computation")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("table", parents=[surface, common], help="sweep over n and q")
    p.add_argument("--n-max", type=int, default=4)
    p.add_argument("--q-max", type=int, default=4)
    p.add_argument("--q", type=int, help="only this q row")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("compare", parents=[surface, common],
                       help="where characteristic p differs from characteristic 0")
    p.add_argument("--n-max", type=int, default=4)
    p.add_argument("--q-max", type=int, default=4)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("presets", parents=[common], help="list surface presets")
    p.set_defaults(func=cmd_presets)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"{parser.prog} {args.command}: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
