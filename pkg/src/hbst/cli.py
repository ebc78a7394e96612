"""Command-line front end: demos, validation, benchmarking, differential
fuzzing, and DOT export.

Exit codes: 0 success, 1 domain failure (invalid tree, oracle mismatch),
2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace

from .bench import STRUCTURES, WORKLOAD_KINDS, WorkloadSpec, emit_report, sweep
from .core import HiddenBst, build_ideal_tree
from .differential import run_differential
from .render import render_dot, render_text
from .serde import DocumentError, InvalidTreeError, load

DEMO_BITS = 4


def build_demo_tree(figure: int) -> HiddenBst:
    """The two 4-bit showcase trees: 1 = balanced midpoint tree built
    top-down, 2 = tree grown by inserting 0..15 in ascending order."""
    if figure == 1:
        return build_ideal_tree(DEMO_BITS)
    tree = HiddenBst(DEMO_BITS)
    for key in range(1 << DEMO_BITS):
        tree.insert(key)
    return tree


def _cmd_demo(args) -> int:
    print(render_text(build_demo_tree(args.figure)), end="")
    return 0


def _cmd_validate(args) -> int:
    try:
        tree = load(args.input, validate=False)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = tree.validate()
    print(report)
    return 0 if report.valid else 1


def _cmd_bench(args, parser: argparse.ArgumentParser) -> int:
    try:
        spec = WorkloadSpec(
            kind=args.workload, n=args.n, bits=args.bits, seed=args.seed, base=args.base
        )
    except ValueError as exc:
        parser.error(str(exc))
    specs = [replace(spec, seed=spec.seed + i) for i in range(args.trials)]
    structures = args.structure or list(STRUCTURES)
    records = sweep(specs, structures)
    text = emit_report(records, format=args.format)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    else:
        print(text, end="")
    return 0


def _cmd_oracle(args) -> int:
    summary = run_differential(args.ops, args.bits, args.seed)
    print(summary)
    return 0 if summary.ok else 1


def _cmd_dot(args) -> int:
    try:
        tree = load(args.input, validate=True)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InvalidTreeError as exc:
        print(f"error: tree document fails validation\n{exc}", file=sys.stderr)
        return 1
    print(render_dot(tree), end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hbst",
        description="Hidden binary search tree demos, validation, and benchmarks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_demo = sub.add_parser("demo", help="print one of the two showcase trees")
    p_demo.add_argument(
        "--figure",
        type=int,
        choices=(1, 2),
        required=True,
        help="1 = balanced midpoint tree, 2 = ascending 0..15 insertion (both 4-bit)",
    )

    p_validate = sub.add_parser("validate", help="structurally check a tree dump")
    p_validate.add_argument("input", help="path to a tree document (JSON)")

    p_bench = sub.add_parser("bench", help="run benchmark trials and emit a report")
    p_bench.add_argument("--workload", choices=WORKLOAD_KINDS, required=True)
    p_bench.add_argument("--n", type=int, required=True, help="number of distinct keys")
    p_bench.add_argument("--bits", type=int, default=16, help="key width (default 16)")
    p_bench.add_argument("--seed", type=int, default=1, help="base seed (default 1)")
    p_bench.add_argument(
        "--base", type=int, default=0, help="interval start for clustered workloads"
    )
    p_bench.add_argument(
        "--structure",
        action="append",
        choices=STRUCTURES,
        help="structure to run (repeatable; default: all)",
    )
    p_bench.add_argument(
        "--trials",
        type=int,
        default=1,
        help="repeat the workload with seeds seed, seed+1, ... (default 1)",
    )
    p_bench.add_argument("--format", choices=("csv", "json"), default="csv")
    p_bench.add_argument("--out", help="write the report to a file instead of stdout")

    p_oracle = sub.add_parser(
        "oracle", help="differential fuzz against the exact-set oracle"
    )
    p_oracle.add_argument("--ops", type=int, required=True, help="operation count")
    p_oracle.add_argument("--bits", type=int, default=16, help="key width (default 16)")
    p_oracle.add_argument("--seed", type=int, default=1, help="seed (default 1)")

    p_dot = sub.add_parser("dot", help="render a tree dump as a DOT graph")
    p_dot.add_argument("input", help="path to a tree document (JSON)")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "demo":
        return _cmd_demo(args)
    if args.command == "validate":
        return _cmd_validate(args)
    if args.command == "bench":
        if args.trials < 1:
            parser.error(f"--trials must be >= 1, got {args.trials}")
        return _cmd_bench(args, parser)
    if args.command == "oracle":
        if args.ops < 1:
            parser.error(f"--ops must be >= 1, got {args.ops}")
        return _cmd_oracle(args)
    return _cmd_dot(args)


if __name__ == "__main__":
    sys.exit(main())
