"""Command-line surface: construction, verification, bounds and certificates.

Exit codes: 0 success, 1 verification failure, 2 input/format error,
3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import sys

from . import certificates, report
from .bounds import bounds_table
from .coloring import is_complete, is_proper
from .construction import lower_bound_coloring
from .errors import BudgetExhausted, HashMismatch, PgError, ShapeError
from .geometry import LINE_CAP_DEFAULT, build_space
from .packings import DEFAULT_BUDGET, build_packing_structure5, packing_containing_spread
from .pg32 import CERTIFICATE_NOTES, exclude_19, explicit_18_coloring, make_frame
from .spreads import geometric_spread

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pgcolor",
        description="Line spreads, packings and complete line colorings of PG(n,q).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("space", help="print the point/line summary of PG(n,q)")
    p.add_argument("n", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--line-cap", type=int, default=LINE_CAP_DEFAULT)

    p = sub.add_parser("spread", help="build the field-reduction line spread")
    p.add_argument("n", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--t", type=int, default=1, help="member dimension (default 1)")
    p.add_argument("--out", help="write a spread certificate to this path")

    p = sub.add_parser("packing", help="packing of PG(3,q) containing the regular spread")
    p.add_argument("n", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--out", help="write a packing certificate to this path")

    p = sub.add_parser("construct", help="build the lower-bound coloring of PG(5,q)")
    p.add_argument("n", type=int)
    p.add_argument("q", type=int)
    p.add_argument("out", nargs="?", help="certificate output path")
    p.add_argument("--out", dest="out_flag", help="certificate output path")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("verify", help="re-verify a certificate file")
    p.add_argument("path")

    p = sub.add_parser("bounds", help="bounds table for ranges of n and q")
    p.add_argument("--n-range", type=int, nargs=2, default=(2, 5), metavar=("LO", "HI"))
    p.add_argument("--q", type=int, nargs="+", default=[2, 3, 4, 5])
    p.add_argument("--out", help="directory for bounds.csv and bounds.png")

    p32 = sub.add_parser("pg32", help="the PG(3,2) case study")
    sub32 = p32.add_subparsers(dest="pg32_command", required=True)

    p = sub32.add_parser("certificate", help="emit the 18-class coloring certificate")
    p.add_argument("--out", help="certificate output path")

    p = sub32.add_parser("verify", help="re-verify a PG(3,2) coloring certificate")
    p.add_argument("path")

    p = sub32.add_parser("exclude19", help="refutation search for 19 classes")
    p.add_argument("--budget", type=int, default=1_000_000_000)
    p.add_argument("--classes", type=int, default=19, help="class count to search")

    return parser


def _cmd_space(args) -> int:
    space = build_space(args.n, args.q, line_cap=args.line_cap)
    print(
        f"PG({args.n},{args.q}): {space.v} points, {space.num_lines} lines, "
        f"{space.r} lines/point"
    )
    print(f"line table sha256: {space.descriptor_hash()}")
    return EXIT_OK


def _cmd_spread(args) -> int:
    space = build_space(args.n, args.q)
    sp = geometric_spread(space, args.t)
    print(
        f"geometric {args.t}-spread of PG({args.n},{args.q}): {len(sp.members)} members "
        f"of {len(sp.members[0].point_ids)} points each"
    )
    if args.out:
        certificates.write_certificate(
            certificates.spread_certificate(space, sp), args.out
        )
        print(f"certificate written to {args.out}")
    return EXIT_OK


def _cmd_packing(args) -> int:
    if args.n != 3:
        print("packing search is supported for PG(3,q)", file=sys.stderr)
        return EXIT_INPUT
    space = build_space(3, args.q)
    sp = geometric_spread(space, 1)
    packing = packing_containing_spread(space, sp, budget=args.budget)
    sizes = [len(s.line_ids) for s in packing.spreads]
    print(
        f"packing of PG(3,{args.q}): {len(packing.spreads)} spreads of {sizes[0]} lines, "
        f"prescribed spread first"
    )
    if args.out:
        certificates.write_certificate(
            certificates.packing_certificate(space, packing), args.out
        )
        print(f"certificate written to {args.out}")
    return EXIT_OK


def _cmd_construct(args) -> int:
    if args.n != 3 * 2 - 1:  # only the i=1 member of the family is desk scale
        raise ShapeError(
            f"n={args.n} is not supported: the construction is built for n=5"
            + ("" if (args.n + 1) % 3 else " (next family member n=11 is beyond desk scale)")
        )
    space = build_space(5, args.q)
    structure = build_packing_structure5(space, budget=args.budget, jobs=args.jobs)
    col = lower_bound_coloring(space, structure)
    proper = is_proper(space, col).proper
    complete = is_complete(space, col, want_witnesses=False).complete
    print(
        f"coloring of PG(5,{args.q}): {col.k} colors on {space.num_lines} lines, "
        f"proper={proper}, complete={complete}"
    )
    out = args.out_flag or args.out
    if out:
        certificates.write_certificate(
            certificates.coloring_certificate(space, col), out
        )
        print(f"certificate written to {out}")
    if not (proper and complete):
        return EXIT_VERIFY_FAIL
    return EXIT_OK


def _cmd_verify(args) -> int:
    cert = certificates.load_certificate(args.path)
    outcome = certificates.verify_certificate(cert)
    if outcome.ok:
        print(f"verified: all claimed verdicts reproduce ({outcome.recomputed})")
        return EXIT_OK
    print("verification FAILED:", file=sys.stderr)
    for line in outcome.mismatches:
        print(f"  {line}", file=sys.stderr)
    return EXIT_VERIFY_FAIL


def _cmd_bounds(args) -> int:
    lo, hi = args.n_range
    rows = bounds_table(range(lo, hi + 1), args.q)
    print(report.format_table(rows))
    if args.out:
        paths = report.write_report(rows, args.out)
        print(f"report written: {paths['csv']}, {paths['figure']}")
    return EXIT_OK


def _cmd_pg32(args) -> int:
    space = build_space(3, 2)
    if args.pg32_command == "certificate":
        frame = make_frame(space)
        col = explicit_18_coloring(frame)
        cert = certificates.coloring_certificate(space, col, notes=CERTIFICATE_NOTES)
        if args.out:
            certificates.write_certificate(cert, args.out)
            print(f"certificate written to {args.out}")
        v = cert["verdicts"]
        print(
            f"18-class coloring of PG(3,2): complete={v['complete']}, proper={v['proper']}"
        )
        return EXIT_OK
    if args.pg32_command == "verify":
        return _cmd_verify(args)
    if args.pg32_command == "exclude19":
        outcome = exclude_19(space, budget=args.budget, num_classes=args.classes)
        print(f"verdict: {outcome.verdict} (nodes: {outcome.nodes})")
        if outcome.verdict == "Inconclusive":
            return EXIT_BUDGET
        return EXIT_OK
    raise AssertionError("unreachable")


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    handlers = {
        "space": _cmd_space,
        "spread": _cmd_spread,
        "packing": _cmd_packing,
        "construct": _cmd_construct,
        "verify": _cmd_verify,
        "bounds": _cmd_bounds,
        "pg32": _cmd_pg32,
    }
    try:
        return handlers[args.command](args)
    except BudgetExhausted as exc:
        print(f"budget exhausted after {exc.nodes} nodes", file=sys.stderr)
        return EXIT_BUDGET
    except HashMismatch as exc:
        print(f"refusing to verify: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PgError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
