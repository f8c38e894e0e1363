"""Command-line interface.

Subcommands: fuzzify, reduce, product, score, run, curves, verify. Exit codes:
0 success, 1 configuration error, 2 data error, 3 internal invariant
violation. ``verify`` additionally exits 1 when a hard fixture check fails.
"""
from __future__ import annotations

import argparse
import sys

from . import __version__
from .errors import ConfigError, DataError, FuzzySoftError, InternalError
from .pipeline import BUILTIN_SOURCE, PipelineConfig, emit_curves, run_pipeline
from .variables import default_variable_specs, load_variable_specs
from .verify import verify_fixtures

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_DATA = 2
EXIT_INTERNAL = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; bad flags are configuration errors here.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--data",
        default=BUILTIN_SOURCE,
        help=f"CSV path, or '{BUILTIN_SOURCE}' for the built-in cohort (default)",
    )
    parser.add_argument("--spec", default=None, help="variable definitions JSON (default: built-in)")
    parser.add_argument("--combiner", choices=["max", "min"], default="max",
                        help="product combiner (default: max, as published)")
    parser.add_argument("--mode", choices=["count", "difference"], default="count",
                        help="comparison mode (default: count, as published)")
    parser.add_argument("--reduction", choices=["per-variable", "off"], default="per-variable",
                        help="normal parameter reduction (default: per-variable)")
    parser.add_argument("--threshold", type=float, default=0.0,
                        help="risk threshold on scores (default: 0)")
    parser.add_argument("--out", default="out", help="output directory (default: out)")
    parser.add_argument("--round", type=int, default=2, dest="round_digits",
                        help="display rounding for text reports (default: 2)")
    parser.add_argument("--product-source", choices=["auto", "published", "computed"],
                        default="auto", dest="product_source",
                        help="score the published 72-column product table or a recomputed one "
                             "(default: auto = published for the study-faithful configuration)")


def _config(args: argparse.Namespace) -> PipelineConfig:
    return PipelineConfig(
        data_source=args.data,
        spec_path=args.spec,
        combiner=args.combiner,
        mode=args.mode,
        reduction=args.reduction,
        threshold=args.threshold,
        out_dir=args.out,
        round_digits=args.round_digits,
        product_source=args.product_source,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fuzzysoft", description=__doc__)
    parser.add_argument("--version", action="version", version=f"fuzzysoft {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, help_text in [
        ("fuzzify", "write the per-variable fuzzy soft sets and the errata report"),
        ("reduce", "write the per-variable reduction summary"),
        ("product", "write the product table that would be scored"),
        ("score", "write the comparison table and score report"),
        ("run", "run the full pipeline and write every output"),
    ]:
        p = sub.add_parser(name, help=help_text)
        _add_common(p)

    p = sub.add_parser("curves", help="write plot-ready membership-curve samples per variable")
    p.add_argument("--spec", default=None, help="variable definitions JSON (default: built-in)")
    p.add_argument("--out", default="curves", help="output directory (default: curves)")
    p.add_argument("--samples", type=int, default=101, help="samples per curve (default: 101)")

    p = sub.add_parser("verify", help="check every published reference table and report deltas")
    p.add_argument("--verbose", action="store_true", help="show per-cell details for passing checks too")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            report = verify_fixtures()
            sys.stdout.write(report.format(verbose=args.verbose))
            return EXIT_OK if report.ok else EXIT_CONFIG

        if args.command == "curves":
            specs = default_variable_specs() if args.spec is None else load_variable_specs(args.spec)
            files = emit_curves(specs, args.out, args.samples)
            for name in sorted(files):
                print(f"wrote {files[name]}")
            return EXIT_OK

        result = run_pipeline(_config(args))
        wanted = {
            "fuzzify": ["fuzzy_", "errata.csv"],
            "reduce": ["reduction.txt"],
            "product": ["product.csv"],
            "score": ["comparison.csv", "scores.csv", "report.txt"],
            "run": [""],
        }[args.command]
        for name in sorted(result.files):
            if any(name.startswith(w) or name == w for w in wanted):
                print(f"wrote {result.files[name]}")
        if args.command in ("score", "run"):
            print(f"product source: {result.product_source_used} "
                  f"({result.product_parameters} parameters)")
            if result.accuracy is not None:
                print(f"accuracy: {result.accuracy:.2f}")
        return EXIT_OK
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except DataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (InternalError, FuzzySoftError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
