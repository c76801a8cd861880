"""
Command-line front end: compute values, print tables, dump EGF coefficients,
query the partition oracle, run the verification harness and serve the HTTP API.

Computed values go to stdout; diagnostics go to stderr through logging.
"""

import argparse
import logging
import sys
import textwrap
from pathlib import Path
from typing import Callable, List, Optional, Sequence, Tuple

from mixedstirling import __version__
from mixedstirling.bounded import SizeBand
from mixedstirling.config import settings
from mixedstirling.egf import (
    count_from_series, egf_mixed, egf_stirling_band, series_dump,
)
from mixedstirling.families import (
    ALL_ALGORITHMS, Family, FamilyQuery, compute_family, family_table, parse_range,
)
from mixedstirling.harness import (
    CaseStatus, VerificationGrid, report_to_json, report_to_text, run_suite,
    table_to_csv, table_to_text,
)
from mixedstirling.mixed import CellSpec, MixedAlgorithm, MixedParams
from mixedstirling.oracle import Configuration, OracleQuery, oracle_count, oracle_enumerate

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


# ================
# Argument Parsing
# ================


class Parser:
    def __init__(self):
        self.parser = argparse.ArgumentParser(
            prog="mixedstirling",
            formatter_class=argparse.RawDescriptionHelpFormatter,
            description="Exact mixed, restricted and associated Stirling numbers",
            epilog=textwrap.dedent(
                """\
                Numbers are printed in decimal without separators.
                Bands: 'unbounded', '<=m', '>=l' or 'l..m'.
            """
            ),
        )
        self.parser.add_argument(
            "-v", "--version", action="version", version="%(prog)s {}".format(__version__),
        )
        self.parser.add_argument(
            "--log-level", default=None,
            help="logging level for stderr diagnostics (default: LOG_LEVEL setting)",
        )
        self.subparsers = self.parser.add_subparsers(
            metavar="[ for help on each: mixedstirling <subcommand> -h ]", title="subcommands"
        )


def _add_band_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--band", help="block-size band, overrides --min/--max")
    p.add_argument("--max", type=int, dest="max_size", help="largest allowed block size")
    p.add_argument("--min", type=int, dest="min_size", help="smallest allowed block size")


def _band(args: argparse.Namespace) -> SizeBand:
    if args.band:
        return SizeBand.parse(args.band)
    return SizeBand(lo=args.min_size or 1, hi=args.max_size)


def _counts(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise ValueError(f"cell counts must be comma-separated integers, got '{text}'")


def _cell_spec(args: argparse.Namespace) -> CellSpec:
    counts = _counts(args.cells)
    labels = set(_counts(args.empty_ok_labels)) if args.empty_ok_labels else set()
    if args.label1_empty_ok:
        labels.add(1)
    if labels:
        return CellSpec.relaxed(counts, sorted(labels))
    return CellSpec.strict(counts)


def _add_cell_args(p: argparse.ArgumentParser, required: bool) -> None:
    p.add_argument("--cells", required=required, help="cells per label, e.g. 2,1")
    p.add_argument(
        "--empty-ok-labels", help="1-based labels whose cells may stay empty, e.g. 1,3",
    )
    p.add_argument(
        "--label1-empty-ok", action="store_true", help="cells of label 1 may stay empty",
    )


# ===========
# Subcommands
# ===========


class Subcommand:
    name: str = ""
    help: str = ""

    def __init__(self, parser: Parser):
        p = parser.subparsers.add_parser(self.name, help=self.help, description=self.help)
        self.add_args(p)
        p.set_defaults(func=self.run)

    def add_args(self, p: argparse.ArgumentParser) -> None:
        raise NotImplementedError

    def run(self, args: argparse.Namespace) -> int:
        raise NotImplementedError


def _add_family_args(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--family", default=Family.MIXED.value, choices=[f.value for f in Family],
    )
    p.add_argument(
        "--algorithm", default=MixedAlgorithm.CLOSED_FORM.value,
        choices=[a.value for a in MixedAlgorithm] + [ALL_ALGORITHMS],
        help="evaluation algorithm for the mixed family",
    )
    _add_band_args(p)
    p.add_argument("--cells", help="cells per label for the mixed-count family")


class Compute(Subcommand):
    name = "compute"
    help = "print one value of a family"

    def add_args(self, p):
        _add_family_args(p)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=int, default=1)
        p.add_argument("--r", type=int, default=0)

    def run(self, args):
        q = FamilyQuery(
            family=args.family, n=args.n, k=args.k, r=args.r, band=_band(args),
            counts=_counts(args.cells) if args.cells else (), algorithm=args.algorithm,
        )
        value = compute_family(q)
        if isinstance(value, dict):
            for name, v in value.items():
                print(f"{name}\t{v}")
        else:
            print(value)
        return EXIT_OK


class Table(Subcommand):
    name = "table"
    help = "print a grid of values: n against k at fixed r, or n against r at fixed k"

    def add_args(self, p):
        _add_family_args(p)
        p.add_argument("--n", required=True, help="row range, e.g. 3..7")
        p.add_argument("--k", default="1", help="k value or range")
        p.add_argument("--r", default="0", help="r value or range")
        p.add_argument("--format", choices=["csv", "text"], default="csv")
        p.add_argument("--include-zeros", action="store_true")

    def run(self, args):
        n_values, k_values, r_values = parse_range(args.n), parse_range(args.k), parse_range(args.r)
        if not (n_values and k_values and r_values):
            raise ValueError("table ranges must be non-empty")
        base = FamilyQuery(
            family=args.family, n=0, k=max(k_values[0], 0), r=max(r_values[0], 0),
            band=_band(args), counts=_counts(args.cells) if args.cells else (),
            algorithm=args.algorithm,
        )
        columns, rows = family_table(base, n_values, k_values, r_values)
        render = table_to_csv if args.format == "csv" else table_to_text
        sys.stdout.write(render(rows, columns, include_zeros=args.include_zeros))
        return EXIT_OK


class Egf(Subcommand):
    name = "egf"
    help = "dump the exact coefficients of a generating function"

    def add_args(self, p):
        p.add_argument(
            "--family", choices=["mixed", "stirling-band", "cells"], default="mixed",
        )
        p.add_argument("--k", type=int, default=1)
        p.add_argument("--r", type=int, default=0)
        p.add_argument("--order", type=int, default=10, help="truncation order")
        p.add_argument(
            "--counts", action="store_true",
            help="print n and n! * coefficient (the counts) instead of fractions",
        )
        _add_band_args(p)
        _add_cell_args(p, required=False)

    def run(self, args):
        if args.order < 0:
            raise ValueError(f"negative order {args.order}")
        band = _band(args)
        if args.family == "mixed":
            series = egf_mixed(MixedParams(n=0, k=args.k, r=args.r, band=band), order=args.order)
        elif args.family == "stirling-band":
            series = egf_stirling_band(args.k, band, args.order)
        else:
            if not args.cells:
                raise ValueError("the cells family needs --cells")
            series = egf_mixed(_cell_spec(args), band, args.order)
        logger.debug(f"[CLI] egf {args.family} order={args.order}")
        if args.counts:
            for n in range(series.order + 1):
                print(f"{n}\t{count_from_series(series, n)}")
        else:
            print(series_dump(series))
        return EXIT_OK


def _format_configuration(config: Configuration) -> str:
    labels = []
    for i, blocks in enumerate(config):
        cells = " ".join("{" + ",".join(str(e) for e in b) + "}" for b in blocks)
        labels.append(f"{i + 1}: {cells or '-'}")
    return " | ".join(labels)


class Oracle(Subcommand):
    name = "oracle"
    help = "count (or list) partitions into labeled cells by exhaustive enumeration"

    def add_args(self, p):
        p.add_argument("--n", type=int, required=True)
        _add_cell_args(p, required=True)
        _add_band_args(p)
        p.add_argument(
            "--distinct-prefix", type=int, default=0,
            help="elements 1..d must lie in pairwise different blocks",
        )
        p.add_argument("--list", action="store_true", help="print every configuration")
        p.add_argument(
            "--allow-over-cap", action="store_true",
            help=f"enumerate beyond the oracle cap (n > {settings.oracle_cap})",
        )

    def run(self, args):
        q = OracleQuery(
            n=args.n, spec=_cell_spec(args), band=_band(args),
            distinct_prefix=args.distinct_prefix, allow_over_cap=args.allow_over_cap,
        )
        if args.list:
            for config in oracle_enumerate(q):
                print(_format_configuration(config))
        else:
            print(oracle_count(q))
        return EXIT_OK


class Verify(Subcommand):
    name = "verify"
    help = "check every registered identity over a parameter grid"

    def add_args(self, p):
        p.add_argument("--grid-file", type=Path, help="YAML file with grid fields")
        p.add_argument("--n-max", type=int)
        p.add_argument("--k-max", type=int)
        p.add_argument("--r-max", type=int)
        p.add_argument("--bands", help="comma-separated band labels")
        p.add_argument("--oracle-max-n", type=int)
        p.add_argument("--case", action="append", dest="cases", help="case id (repeatable)")
        p.add_argument("--workers", type=int, help="threads evaluating cases")
        p.add_argument("--format", choices=["text", "json"], default="text")
        p.add_argument("--output", type=Path, help="write the report here instead of stdout")
        p.add_argument(
            "--strict", action="store_true",
            help="exit 1 when a case outside the expected-flag list fails",
        )

    def run(self, args):
        grid = VerificationGrid.from_yaml(args.grid_file) if args.grid_file else VerificationGrid()
        overrides = {
            "n_max": args.n_max, "k_max": args.k_max, "r_max": args.r_max,
            "oracle_max_n": args.oracle_max_n,
            "bands": tuple(b for b in args.bands.split(",") if b.strip()) if args.bands else None,
        }
        overrides = {k: v for k, v in overrides.items() if v is not None}
        if overrides:
            grid = VerificationGrid(**{**grid.model_dump(), **overrides})

        report = run_suite(grid, case_ids=args.cases, workers=args.workers)
        text = report_to_json(report) if args.format == "json" else report_to_text(report)
        if args.output:
            args.output.write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
            logger.info(f"[CLI] report written to {args.output}")
        else:
            sys.stdout.write(text if text.endswith("\n") else text + "\n")

        failed = [
            c for c in report.unexpected
            if c.status in (CaseStatus.FLAGGED, CaseStatus.ERROR)
        ]
        for c in failed:
            logger.warning(f"[CLI] unexpected {c.status.value}: {c.id}")
        return EXIT_FAILED if args.strict and failed else EXIT_OK


class Serve(Subcommand):
    name = "serve"
    help = "serve the HTTP API with uvicorn"

    def add_args(self, p):
        p.add_argument("--host", default=settings.api_host)
        p.add_argument("--port", type=int, default=settings.api_port)

    def run(self, args):
        import uvicorn
        from mixedstirling.api.server import app

        uvicorn.run(app, host=args.host, port=args.port)
        return EXIT_OK


SUBCOMMANDS: Sequence[Callable[[Parser], Subcommand]] = (
    Compute, Table, Egf, Oracle, Verify, Serve,
)


def _configure_logging(level: Optional[str]) -> None:
    name = (level or settings.log_level).upper()
    if not isinstance(logging.getLevelName(name), int):
        raise ValueError(f"Unknown log level '{level}'")
    logging.basicConfig(
        level=name, stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s %(message)s",
    )
    logging.getLogger().setLevel(name)


def cli_main(argv: Optional[List[str]] = None) -> int:
    """Run one subcommand; returns the process exit status."""
    parser = Parser()
    for cmd in SUBCOMMANDS:
        cmd(parser)

    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv:
        parser.parser.print_help(sys.stderr)
        return EXIT_USAGE

    try:
        args = parser.parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if not hasattr(args, "func"):
        parser.parser.print_usage(sys.stderr)
        return EXIT_USAGE

    try:
        _configure_logging(args.log_level)
        return args.func(args)
    except ValueError as e:
        print(f"mixedstirling: error: {e}", file=sys.stderr)
        return EXIT_USAGE
