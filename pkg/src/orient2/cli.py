"""Command-line front end.

One graph per line on stdin (graph6 or edge-list via --file), results on
stdout, batch-friendly.  Exit codes: 0 success, 1 negative or
indeterminate answer, 2 bad input, 3 internal verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable

from ._backend import backend_name
from .codec import GraphFormatError, emit_graph6, emit_orientation, parse_graph
from .construct import InternalVerificationError, orient_diameter_two, threshold_size
from .graphs import INFINITE, complement, components, diameter
from .oracle import (
    SearchBudget,
    SearchStatus,
    default_budget,
    exact_oriented_diameter,
    exists_orientation_diameter2,
    extremal_graph,
    verify_theorem,
)
from .structure import classify_component, excess

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_BAD_INPUT = 2
EXIT_VERIFY_FAILED = 3

JSON_SCHEMA = "orient2/1"


def _input_lines(args: argparse.Namespace) -> Iterable[str]:
    if getattr(args, "file", None):
        with open(args.file, "r", encoding="ascii") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    if "\n" in text.strip() and text.strip().splitlines()[0].split()[0].isdigit():
        # a single edge-list block spans several lines
        yield text
        return
    for line in text.splitlines():
        if line.strip():
            yield line


def _budget(args: argparse.Namespace) -> SearchBudget:
    if getattr(args, "budget", None):
        return SearchBudget(max_nodes=args.budget)
    return default_budget()


def cmd_orient(args: argparse.Namespace) -> int:
    for line in _input_lines(args):
        try:
            g = parse_graph(line)
        except GraphFormatError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_BAD_INPUT
        if g.n < 5:
            print(f"error: need at least 5 vertices, got {g.n}", file=sys.stderr)
            return EXIT_BAD_INPUT
        if g.m < threshold_size(g.n):
            print(
                f"error: graph of order {g.n} has {g.m} edges; the guarantee "
                f"needs at least {threshold_size(g.n)}",
                file=sys.stderr,
            )
            return EXIT_BAD_INPUT
        try:
            orientation, trace = orient_diameter_two(g)
        except InternalVerificationError as exc:
            print(f"internal error: {exc}", file=sys.stderr)
            return EXIT_VERIFY_FAILED
        # independent re-check before anything is printed
        if diameter(orientation.dir) > 2:
            print("internal error: emitted orientation fails its re-check", file=sys.stderr)
            return EXIT_VERIFY_FAILED
        if args.json:
            payload = {
                "schema": JSON_SCHEMA,
                "n": g.n,
                "arcs": [[u, v] for u, v in orientation.dir.arcs()],
                "diameter": 2,
            }
            if args.trace:
                payload["trace"] = trace.to_json()
            print(json.dumps(payload, separators=(",", ":")))
        else:
            print(emit_orientation(orientation))
            if args.trace:
                for entry in trace.to_json():
                    print(f"# {json.dumps(entry, separators=(',', ':'))}")
    return EXIT_OK


def cmd_diameter(args: argparse.Namespace) -> int:
    status = EXIT_OK
    for line in _input_lines(args):
        try:
            g = parse_graph(line)
        except GraphFormatError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_BAD_INPUT
        value = exact_oriented_diameter(g, _budget(args))
        if value is None:
            print("indeterminate")
            status = EXIT_NEGATIVE
        elif value == INFINITE:
            print("infinite")
        else:
            print(int(value))
    return status


def cmd_verify(args: argparse.Namespace) -> int:
    if not 5 <= args.n <= 11:
        print("error: --n must be between 5 and 11", file=sys.stderr)
        return EXIT_BAD_INPUT
    report = verify_theorem(args.n)
    print(
        f"n={report.n}: checked {report.instances_checked} instances, "
        f"{len(report.failures)} failures, {report.fallback_count} oracle fallbacks, "
        f"{report.wall_time:.2f}s"
    )
    for g6 in report.failures:
        print(f"failure: {g6}")
    if report.fallback_count:
        print("warning: oracle fallback fired; the case analysis may have a gap", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def cmd_sharpness(args: argparse.Namespace) -> int:
    if not 5 <= args.n <= 9:
        print("error: --n must be between 5 and 9", file=sys.stderr)
        return EXIT_BAD_INPUT
    outcome = exists_orientation_diameter2(extremal_graph(args.n), _budget(args))
    if outcome.status is SearchStatus.INDETERMINATE:
        print("indeterminate: search budget exhausted", file=sys.stderr)
        return EXIT_NEGATIVE
    if outcome.status is SearchStatus.NO:
        print(f"CONFIRMED: extremal graph of order {args.n} has no diameter-2 orientation")
        return EXIT_OK
    print(f"REFUTED: extremal graph of order {args.n} admits a diameter-2 orientation")
    return EXIT_NEGATIVE


def cmd_classify(args: argparse.Namespace) -> int:
    for line in _input_lines(args):
        try:
            g = parse_graph(line)
        except GraphFormatError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_BAD_INPUT
        blue = complement(g)
        print(f"graph {emit_graph6(g)}: complement components")
        for comp in components(blue):
            cls = classify_component(blue, comp)
            sub = blue.induced(comp)
            print(f"  {{{','.join(map(str, comp))}}} order={len(comp)} class={cls} excess={excess(sub)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orient2",
        description="Diameter-two orientations of dense graphs and exact oriented diameters.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s (backend: {backend_name()})")
    sub = parser.add_subparsers(dest="command", required=True)

    p_orient = sub.add_parser("orient", help="orient graphs at or above the size threshold")
    p_orient.add_argument("--file", help="read input from a file instead of stdin")
    p_orient.add_argument("--json", action="store_true", help="emit JSON instead of digraph6")
    p_orient.add_argument("--trace", action="store_true", help="include construction steps")
    p_orient.set_defaults(func=cmd_orient)

    p_diam = sub.add_parser("diameter", help="exact oriented diameter by exhaustive search")
    p_diam.add_argument("--file", help="read input from a file instead of stdin")
    p_diam.add_argument("--exact", action="store_true", help="accepted for compatibility (always exact)")
    p_diam.add_argument("--budget", type=int, help="search-node budget override")
    p_diam.set_defaults(func=cmd_diameter)

    p_verify = sub.add_parser("verify", help="check every threshold instance of one order")
    p_verify.add_argument("--n", type=int, required=True)
    p_verify.set_defaults(func=cmd_verify)

    p_sharp = sub.add_parser("sharpness", help="confirm the extremal graph is not orientable")
    p_sharp.add_argument("--n", type=int, required=True)
    p_sharp.add_argument("--budget", type=int, help="search-node budget override")
    p_sharp.set_defaults(func=cmd_sharpness)

    p_classify = sub.add_parser("classify", help="tabulate complement component classes")
    p_classify.add_argument("--file", help="read input from a file instead of stdin")
    p_classify.set_defaults(func=cmd_classify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
