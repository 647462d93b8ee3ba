"""Command-line front end.

Six subcommands: classify, diagram, construct, recover, verify, and
enumerate.  Exit codes follow a pipeline-friendly contract: 0 for
success (and for "yes, theta-vexillary"), 1 for a negative verdict or
verification mismatches, 2 for unusable input.  All output is plain
ASCII and deterministic, including across worker counts.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import theta
from .classify import (
    build_report,
    classify_by_triple,
    enumerate_theta_vexillary,
    verify_equivalence,
)
from .diagram import render_extended
from .sigperm import RankTooLargeError, format_window, parse_window


def _print_classify_text(report) -> None:
    print(f"window: {' '.join(str(v) for v in report.window)}")
    print(f"theta-vexillary: {'yes' if report.theta_vexillary else 'no'}")
    if report.triple is not None:
        print(f"triple: {theta.format_triple(report.triple)}")
    if report.corner_records:
        print("corners:")
        for c in report.corner_records:
            print(f"  ({c.k}, {c.p}, {c.q}) {c.kind.value}")
    if report.pattern_witness is not None:
        pat, idx = report.pattern_witness
        print(
            "pattern witness: "
            f"{format_window(pat)} at positions {' '.join(str(i) for i in idx)}"
        )
    if report.corner_witness is not None:
        c = report.corner_witness
        print(f"stray corner: ({c.k}, {c.p}, {c.q})")


def cmd_classify(args) -> int:
    w = parse_window(args.window)
    report = build_report(w)
    if args.json:
        print(json.dumps(report.to_json(), indent=2))
    else:
        _print_classify_text(report)
    return 0 if report.theta_vexillary else 1


def cmd_diagram(args) -> int:
    w = parse_window(args.window)
    report = build_report(w)
    print(
        render_extended(
            w, show_crosses=args.show_crosses, corner_records=report.corner_records
        )
    )
    return 0


def cmd_construct(args) -> int:
    t = theta.parse_triple(args.triple, args.rank)
    w = theta.construct(t)
    dual = theta.construct_inverse(t)
    if args.json:
        print(
            json.dumps(
                {
                    "schema": "1",
                    "triple": theta.triple_to_json(t),
                    "window": list(w.window),
                    "inverse": list(dual.window),
                },
                indent=2,
            )
        )
    else:
        print(format_window(w))
        print(format_window(dual))
    return 0


def cmd_recover(args) -> int:
    w = parse_window(args.window)
    ok, t = classify_by_triple(w)
    if not ok:
        print("NOT THETA-VEXILLARY")
        return 1
    if args.json:
        print(json.dumps({"schema": "1", "triple": theta.triple_to_json(t)}, indent=2))
    else:
        print(theta.format_triple(t).rstrip())
    return 0


def cmd_verify(args) -> int:
    summary = verify_equivalence(args.rank, args.jobs, allow_large=args.allow_large)
    if args.json:
        print(
            json.dumps(
                {
                    "schema": "1",
                    "n": summary.n,
                    "total": summary.total,
                    "theta_vexillary": summary.theta_vexillary,
                    "mismatches": [list(win) for win in summary.mismatches],
                },
                indent=2,
            )
        )
    else:
        print(summary.describe())
        for win in summary.mismatches:
            print(f"mismatch: {' '.join(str(v) for v in win)}")
    return 1 if summary.mismatches else 0


def cmd_enumerate(args) -> int:
    for w in enumerate_theta_vexillary(args.rank, allow_large=args.allow_large):
        print(format_window(w))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thetavex",
        description="Classify, construct, and explore theta-vexillary signed permutations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="full classification report for one window")
    p.add_argument("window", help='window such as "-2 3 1"')
    p.add_argument("--json", action="store_true", help="emit the JSON report")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("diagram", help="ASCII extended diagram with annotated corners")
    p.add_argument("window")
    p.add_argument(
        "--show-crosses", action="store_true", help="mark crossed-out boxes with x"
    )
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("construct", help="build the permutation and its inverse from a triple")
    p.add_argument("triple", help='triple such as "1 2; 3 3; 2 -1"')
    p.add_argument(
        "-n", "--rank", type=int, default=None, help="ambient rank (default: smallest that fits)"
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("recover", help="recover the unique triple of a window")
    p.add_argument("window")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_recover)

    p = sub.add_parser("verify", help="cross-check all three classifiers over W_n")
    p.add_argument("rank", type=int)
    p.add_argument("--jobs", type=int, default=1, help="parallel worker processes")
    p.add_argument("--allow-large", action="store_true", help="lift the rank guard")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="stream all theta-vexillary windows of W_n")
    p.add_argument("rank", type=int)
    p.add_argument("--allow-large", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage/help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (
        ValueError,  # covers bad windows, bad triples, and both triple errors
        RankTooLargeError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
