"""
bench: run invariant checks over a batch of seeded random instances
"""

import argparse
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence

import numpy as np
import pandas as pd
from numpy.random import PCG64, Generator, SeedSequence

from config.settings import settings
from isoset.commands.common import Output, Stopwatch, summarize
from isoset.exceptions import BadParameter, IsosetError
from isoset.models.reports import BenchSummary, CheckOutcome, RunReport
from isoset.services.checks import CHECKS, CheckContext, run_checks
from isoset.services.error_handler import EXIT_OK, EXIT_STALL, EXIT_VERIFICATION
from isoset.services.generators import FAMILIES, gen_random, make_spec
from isoset.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class BenchTask:
    index: int
    seed: int
    family: str
    n_min: int
    n_max: int
    k: Optional[int]
    p: float
    checks: Sequence[str]


def instance_seeds(seed: int, count: int) -> List[int]:
    """Independent 64-bit seeds, one per instance, derived from the batch seed"""
    return [int(child.generate_state(1, dtype=np.uint64)[0]) for child in SeedSequence(seed).spawn(count)]


def run_task(task: BenchTask) -> RunReport:
    """One instance: draw its order, build it, run the checks"""
    clock = Stopwatch()
    n = int(Generator(PCG64(task.seed)).integers(task.n_min, task.n_max + 1))
    params = {"n": n, "p": task.p}
    if task.family == "kpartite":
        params["k"] = task.k
    try:
        spec = make_spec(task.family, **params)
        graph = gen_random(spec, task.seed)
    except IsosetError as e:
        failed = CheckOutcome(name="generate", passed=False, detail=f"{type(e).__name__}: {e}")
        return RunReport(command="bench", checks=[failed], verdict=False, elapsed_seconds=clock.elapsed)
    outcomes = run_checks(graph, task.checks, CheckContext(seed=task.seed, spec=spec))
    return RunReport(
        command="bench", instance=summarize(graph, family=task.family, seed=task.seed), checks=outcomes,
        verdict=all(outcome.passed for outcome in outcomes), elapsed_seconds=clock.elapsed,
    )


def run_tasks(tasks: Sequence[BenchTask], workers: int) -> Iterator[RunReport]:
    """Reports in task order whatever the completion order"""
    if workers <= 1:
        for task in tasks:
            yield run_task(task)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(run_task, tasks)


def outcome_table(reports: Sequence[RunReport]) -> pd.DataFrame:
    rows = []
    for index, report in enumerate(reports):
        for outcome in report.checks:
            ratio = None
            if outcome.witness_size is not None and outcome.bound is not None and Fraction(outcome.bound) > 0:
                ratio = float(Fraction(outcome.witness_size) / Fraction(outcome.bound))
            rows.append({
                "instance": index,
                "seed": report.instance.seed if report.instance else None,
                "n": report.instance.n if report.instance else None,
                "m": report.instance.m if report.instance else None,
                "check": outcome.name,
                "passed": outcome.passed,
                "skipped": outcome.skipped,
                "stalled": outcome.stalled,
                "witness_size": outcome.witness_size,
                "bound": outcome.bound,
                "ratio": ratio,
                "detail": outcome.detail,
            })
    columns = ["instance", "seed", "n", "m", "check", "passed", "skipped", "stalled",
               "witness_size", "bound", "ratio", "detail"]
    return pd.DataFrame(rows, columns=columns)


def summarize_table(table: pd.DataFrame, family: str, count: int, seed: int) -> BenchSummary:
    per_check = {}
    for name, group in table.groupby("check", sort=True):
        stalled = int(group["stalled"].sum())
        skipped = int(group["skipped"].sum())
        passed = int((group["passed"] & ~group["skipped"]).sum())
        per_check[str(name)] = {
            "pass": passed,
            "fail": int(len(group)) - passed - skipped - stalled,
            "stall": stalled,
            "skip": skipped,
        }
    ratios = table["ratio"].dropna()
    return BenchSummary(
        family=family, count=count, seed=seed, per_check=per_check,
        failures=sum(counts["fail"] for counts in per_check.values()),
        stalls=sum(counts["stall"] for counts in per_check.values()),
        mean_ratio=float(ratios.mean()) if len(ratios) else None,
    )


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("bench", help="batch invariant checks")
    parser.add_argument("--family", required=True, choices=FAMILIES)
    parser.add_argument("--n-min", type=int, default=3)
    parser.add_argument("--n-max", type=int, required=True)
    parser.add_argument("--k", type=int, help="number of parts (kpartite)")
    parser.add_argument("--p", type=float, default=0.5)
    parser.add_argument("--count", type=int, default=100)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--checks", type=lambda text: [c for c in text.split(",") if c], required=True,
                        help="comma-separated: " + ",".join(CHECKS))
    parser.add_argument("--workers", type=int, help="worker processes (default: BENCH_WORKERS)")
    parser.add_argument("--csv", help="write the per-instance table here")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, out: Output) -> int:
    unknown = [name for name in args.checks if name not in CHECKS]
    if unknown:
        raise BadParameter(f"unknown checks {unknown}, expected some of {list(CHECKS)}")
    if args.n_min < 1 or args.n_max < args.n_min:
        raise BadParameter(f"bad order range {args.n_min}..{args.n_max}")
    if args.count < 1:
        raise BadParameter("--count must be positive")

    clock = Stopwatch()
    tasks = [
        BenchTask(index, seed, args.family, args.n_min, args.n_max, args.k, args.p, tuple(args.checks))
        for index, seed in enumerate(instance_seeds(args.seed, args.count))
    ]
    workers = args.workers or settings.BENCH_WORKERS
    logger.info(f"Bench {args.family}: {args.count} instances, checks {args.checks}, {workers} workers")

    reports: List[RunReport] = []
    for report in run_tasks(tasks, workers):
        reports.append(report)
        if out.json:
            out.report(report)
        else:
            states = " ".join(
                f"{c.name}={'skip' if c.skipped else 'stall' if c.stalled else 'pass' if c.passed else 'fail'}"
                for c in report.checks
            )
            size = f"n={report.instance.n} m={report.instance.m}" if report.instance else "n=? m=?"
            seed = report.instance.seed if report.instance else "?"
            out.text(f"{len(reports) - 1} seed={seed} {size} {states}\n")

    table = outcome_table(reports)
    if args.csv:
        table.to_csv(args.csv, index=False)
        logger.info(f"Wrote {len(table)} rows to {args.csv}")
    summary = summarize_table(table, args.family, args.count, args.seed)

    if out.json:
        out.stream.write(summary.model_dump_json() + "\n")
    else:
        frame = pd.DataFrame.from_dict(summary.per_check, orient="index")
        out.text(frame.to_string() + "\n")
        out.text(f"failures={summary.failures} stalls={summary.stalls} time={clock.elapsed:.3f}s\n")
    logger.info(f"Bench finished: {summary.failures} failures, {summary.stalls} stalls")

    if summary.ok:
        return EXIT_OK
    return EXIT_VERIFICATION if summary.failures else EXIT_STALL
