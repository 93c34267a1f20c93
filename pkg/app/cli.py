# app/cli.py
"""
Command-line front end.

    python -m app problem.txt [more.txt ...] [--benchmark katsura2] [--algorithm sigmoeller]
                  [--criteria all|none|f5,singular,syzygy] [--verify] [--trace]
                  [--stats-json PATH] [--experimental-ufd] [--workers N] [--max-pops N]

Exit status: 0 success, 1 verification or computation failure, 2 input or ring error.
"""
from __future__ import annotations

import argparse
import json
import sys
import threading
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Optional, Sequence

from . import config
from .errors import ComputationError, InputError, UnsupportedRingError, WeakGBError
from .logging_setup import get_logger, setup_logging
from .problems import BENCHMARKS, ProblemFile, bundled_benchmark, load_problem
from .schema import StatsReport
from .sig_moeller import CriteriaFlags
from .workflow import run

logger = get_logger("weakgb.cli")

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2

_print_lock = threading.Lock()


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="weakgb", description="Weak Groebner bases over effective coefficient rings.")
    p.add_argument("problems", nargs="*", help="problem files")
    p.add_argument("--benchmark", action="append", default=[], choices=BENCHMARKS, help="bundled benchmark (repeatable)")
    p.add_argument("--algorithm", choices=("moeller", "sigmoeller"), default="sigmoeller")
    p.add_argument("--criteria", default=None, help="all, none, or a comma list of syzygy,f5,singular")
    p.add_argument("--verify", action="store_true", help="check the output is a weak Groebner basis of the input")
    p.add_argument("--trace", action="store_true", help="print signature-driver events")
    p.add_argument("--stats-json", metavar="PATH", help="write the report(s) as JSON")
    p.add_argument("--experimental-ufd", action="store_true", help="allow multipoly(...) coefficient rings")
    p.add_argument("--workers", type=int, default=config.CLI_WORKERS, help="problems solved in parallel")
    p.add_argument("--max-pops", type=int, default=None, help="iteration ceiling (default MAX_QUEUE_POPS)")
    p.add_argument("--log-level", default=None)
    return p


def _emit(lines: Sequence[str]) -> None:
    with _print_lock:
        for line in lines:
            print(line)
        sys.stdout.flush()


def _render(report: StatsReport) -> list[str]:
    out = [f"# {report.problem}: {report.algorithm}, {len(report.basis)} elements, {report.wall_time_ms:.1f} ms"]
    for k, entry in enumerate(report.basis, 1):
        sig = f"  [{entry.signature}]" if entry.signature else ""
        out.append(f"g{k} = {entry.polynomial}{sig}")
    for name, value in report.stats.model_dump().items():
        out.append(f"# {name}: {value}")
    if report.verified is not None:
        out.append(f"# verified: {'pass' if report.verified else 'FAIL'}")
    return out


def _solve(problem: ProblemFile, args: argparse.Namespace, criteria: CriteriaFlags) -> tuple[int, Optional[StatsReport]]:
    # trace lines stream only when a single problem runs; otherwise they are printed with the report
    stream = args.trace and args.workers <= 1
    try:
        report = run(
            problem,
            algorithm=args.algorithm,
            criteria=criteria,
            verify=args.verify,
            trace=args.trace,
            experimental=args.experimental_ufd or config.EXPERIMENTAL_UFD,
            on_trace=(lambda line: _emit([line])) if stream else None,
            max_pops=args.max_pops,
        )
    except (InputError, UnsupportedRingError) as e:
        _emit_error(f"{problem.name}: {e}")
        return EXIT_INPUT, None
    except ComputationError as e:
        _emit_error(f"{problem.name}: {e}")
        return EXIT_FAILED, None

    lines = [] if stream else list(report.trace)
    _emit(lines + _render(report))
    return (EXIT_FAILED if report.verified is False else EXIT_OK), report


def _emit_error(message: str) -> None:
    with _print_lock:
        print(f"error: {message}", file=sys.stderr)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(args.log_level or "WARNING", to_file=False)

    problems: list[ProblemFile] = []
    try:
        criteria = CriteriaFlags.parse(args.criteria or config.DEFAULT_CRITERIA)
        problems.extend(load_problem(path) for path in args.problems)
        problems.extend(bundled_benchmark(name) for name in args.benchmark)
    except WeakGBError as e:
        _emit_error(str(e))
        return EXIT_INPUT
    if not problems:
        _emit_error("nothing to do: give problem files or --benchmark NAME")
        return EXIT_INPUT

    workers = max(1, args.workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(lambda p: _solve(p, args, criteria), problems))

    reports = [r for _, r in results if r is not None]
    if args.stats_json:
        payload = [r.model_dump(mode="json") for r in reports]
        Path(args.stats_json).write_text(
            json.dumps(payload[0] if len(payload) == 1 else payload, indent=2), encoding="utf-8"
        )
        logger.info("STATS_WRITTEN", extra={"path": args.stats_json, "reports": len(payload)})

    return max(code for code, _ in results)
