"""Command-line entry point: ``tclose audit`` and ``tclose bench``."""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import bench as bench_mod
from . import report
from .distribution import OrderingPolicy
from .errors import TCloseError
from .metrics import METHOD_CHOICES, audit
from .table import MISSING_POLICIES, Schema, parse_csv

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3

METRIC_CHOICES = ("k", "l", "t", "all")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


@dataclass
class RunConfig:
    input_path: str = ""
    schema_path: str = ""
    metrics: tuple[str, ...] = ("k", "l", "t")
    attributes: list[str] | None = None
    method: str = "auto"
    ordering: OrderingPolicy | None = None
    format: str = "text"
    precision: int = 4
    missing: str = "error"
    sizes: list[int] = field(default_factory=list)
    reps: int = 3
    naive: bool = True
    seed: int = 0

    def validate(self):
        if self.precision < 1:
            raise UsageError("--precision must be >= 1")
        if any(m < 2 for m in self.sizes):
            raise UsageError("benchmark sizes must be >= 2")
        if self.reps < 1:
            raise UsageError("--reps must be >= 1")


def _sizes(text):
    try:
        return [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of integers: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tclose", description="Privacy metrics for anonymized tables.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    a = sub.add_parser("audit", help="compute k-anonymity, l-diversity and t-closeness")
    a.add_argument("--input", required=True, help="CSV file with a header row")
    a.add_argument("--schema", required=True, help="JSON attribute schema")
    a.add_argument("--metric", choices=METRIC_CHOICES, default="all")
    a.add_argument("--attribute", action="append",
                   help="sensitive attribute to audit (repeatable; default: all)")
    a.add_argument("--method", choices=METHOD_CHOICES, default="auto")
    a.add_argument("--order", choices=[p.value for p in OrderingPolicy],
                   help="domain ordering (default: value for numeric, appearance for categorical)")
    a.add_argument("--format", choices=("text", "json"), default="text")
    a.add_argument("--precision", type=int, default=4)
    a.add_argument("--missing", choices=MISSING_POLICIES, default="error")

    b = sub.add_parser("bench", help="time the quadratic vs single-pass EMD")
    b.add_argument("--sizes", type=_sizes, required=True, help="e.g. 1024,2048,4096")
    b.add_argument("--reps", type=int, default=3)
    b.add_argument("--efficient-only", action="store_true",
                   help="skip the quadratic method (for large sizes)")
    b.add_argument("--seed", type=int, default=0)
    return parser


def config_from_args(args) -> RunConfig:
    if args.command == "bench":
        return RunConfig(sizes=args.sizes, reps=args.reps, naive=not args.efficient_only,
                         seed=args.seed)
    metrics = ("k", "l", "t") if args.metric == "all" else (args.metric,)
    return RunConfig(
        input_path=args.input,
        schema_path=args.schema,
        metrics=metrics,
        attributes=args.attribute,
        method=args.method,
        ordering=OrderingPolicy(args.order) if args.order else None,
        format=args.format,
        precision=args.precision,
        missing=args.missing,
    )


def _read(path: str, what: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise TCloseError(f"cannot read {what} file {path}: {exc.strerror}") from None


def run(config: RunConfig, out=None) -> int:
    out = out or sys.stdout
    schema = Schema.from_json(_read(config.schema_path, "schema"))
    table = parse_csv(_read(config.input_path, "input"), schema, missing=config.missing)
    result = audit(table, config.metrics, config.attributes, config.method, config.ordering)
    for a in result.attributes:
        if a.t != max(d for _, d in a.per_class):
            raise AssertionError(f"t for {a.name} is not the maximum class distance")
    doc = report.to_dict(result, config.input_path, config.schema_path, config.precision)
    out.write(report.dumps(doc) if config.format == "json" else report.render_text(doc))
    return EXIT_OK


def bench(config: RunConfig, out=None) -> int:
    out = out or sys.stdout
    rows = bench_mod.run_benchmark(config.sizes, config.reps, config.naive, config.seed)
    out.write(bench_mod.format_rows(rows))
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("tclose: a command is required (audit or bench)")
        config = config_from_args(args)
        config.validate()
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(exc, file=sys.stderr)
        return EXIT_USAGE

    try:
        return (bench if args.command == "bench" else run)(config)
    except TCloseError as exc:
        print(f"tclose: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # invariant violations; never expected
        print(f"tclose: internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
