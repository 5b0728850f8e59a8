"""Command-line front door.

Progress and warnings go to standard error; standard output carries only
the written report paths, so the command composes in scripts. Exit codes:
0 when at least one repository was analyzed, 1 when all failed, 2 on
usage errors.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from datetime import datetime, timezone

from . import __version__
from .cst.languages import LANGUAGE_IDS
from .engine import AnalysisConfig, EvolutionTable, evaluate
from .errors import CodevoError
from .metrics import builtin_registry
from .repo import RepositoryHandle, resolve_sources
from .report import write_reports
from .sampling import SamplingWindow

log = logging.getLogger("codevo")


@dataclass
class CliArgs:
    report_type: str
    repo: str
    monthly: bool = False
    from_year: int | None = None
    to_year: int | None = None
    output: str = "."
    csv_only: bool = False
    html_only: bool = False
    verbose: bool = False
    workers: int | None = None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="codevo",
        description="Analyze code evolution of Git repositories: sample the history "
        "at year or month boundaries, compute metrics per snapshot, and write "
        "CSV + HTML reports.",
    )
    parser.add_argument(
        "-r",
        "--report",
        dest="report_type",
        required=True,
        choices=LANGUAGE_IDS,
        help="language to analyze (selects grammar and builtin metrics)",
    )
    parser.add_argument(
        "repo",
        help="Git URL, local repository, or a directory containing repositories",
    )
    parser.add_argument(
        "--monthly",
        action="store_true",
        help="sample at month boundaries instead of years",
    )
    parser.add_argument("--from", dest="from_year", type=int, metavar="YEAR",
                        help="first year to analyze (default: 4 years back)")
    parser.add_argument("--to", dest="to_year", type=int, metavar="YEAR",
                        help="last year to analyze (default: current year)")
    parser.add_argument("-o", "--output", default=".", help="report directory (default: .)")
    fmt = parser.add_mutually_exclusive_group()
    fmt.add_argument("--csv-only", action="store_true", help="write only CSV reports")
    fmt.add_argument("--html-only", action="store_true", help="write only HTML reports")
    parser.add_argument("--workers", type=int, default=None,
                        help="parallel repositories in directory mode (default: CPU count)")
    parser.add_argument("-v", "--verbose", action="store_true", help="chatty progress output")
    parser.add_argument("--version", action="version", version=f"codevo {__version__}")
    return parser


def parse_args(argv: list[str] | None = None) -> CliArgs:
    parser = build_parser()
    ns = parser.parse_args(argv)
    if ns.from_year is not None and ns.to_year is not None and ns.from_year > ns.to_year:
        parser.error(f"--from {ns.from_year} is after --to {ns.to_year}")
    return CliArgs(
        report_type=ns.report_type,
        repo=ns.repo,
        monthly=ns.monthly,
        from_year=ns.from_year,
        to_year=ns.to_year,
        output=ns.output,
        csv_only=ns.csv_only,
        html_only=ns.html_only,
        verbose=ns.verbose,
        workers=ns.workers,
    )


def _window(args: CliArgs) -> SamplingWindow | None:
    if args.from_year is None and args.to_year is None:
        return None
    current = datetime.now(timezone.utc).year
    start = args.from_year if args.from_year is not None else min(args.to_year - 4, current - 4)
    end = args.to_year if args.to_year is not None else current
    return SamplingWindow(start_year=start, end_year=end)


def _analyze_one(args: CliArgs, handle: RepositoryHandle) -> EvolutionTable | None:
    config = AnalysisConfig(
        repo_input=args.repo,
        language=args.report_type,
        date_unit="month" if args.monthly else "year",
        window=_window(args),
        output_dir=args.output,
    )
    registry = builtin_registry(args.report_type)
    try:
        return evaluate(config, registry, handle, progress=log.info)
    except CodevoError as exc:
        log.warning("skipping %s: %s", handle.name, exc)
    except Exception as exc:
        log.warning("skipping %s: unexpected error: %r", handle.name, exc)
    return None


def run(args: CliArgs) -> int:
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(levelname)s %(message)s",
    )
    try:
        handles = resolve_sources(args.repo)
    except CodevoError as exc:
        log.error("%s", exc)
        return 1

    if len(handles) == 1:
        tables = [t for t in (_analyze_one(args, handles[0]),) if t is not None]
    else:
        workers = args.workers or min(len(handles), os.cpu_count() or 1)
        workers = max(1, workers)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = pool.map(lambda h: _analyze_one(args, h), handles)
        tables = [t for t in results if t is not None]

    if not tables:
        log.error("no repository could be analyzed")
        return 1

    if args.csv_only:
        formats: tuple[str, ...] = ("csv",)
    elif args.html_only:
        formats = ("html",)
    else:
        formats = ("html", "csv")
    try:
        paths = write_reports(tables, args.output, formats=formats)
    except CodevoError as exc:
        log.error("%s", exc)
        return 1
    for path in paths:
        print(path)
    return 0


def main(argv: list[str] | None = None) -> int:
    return run(parse_args(argv))


if __name__ == "__main__":
    sys.exit(main())
