"""
exact: ground-truth values with canonical witnesses
"""

import argparse

from isoset.commands.common import Output, Stopwatch, load_graph, summarize
from isoset.exceptions import BadParameter, VerificationFailed
from isoset.models.reports import RunReport, vertex_list
from isoset.services.exact import METHODS, iota, iota_independent, search_disjoint_sets, total_domination_number
from isoset.services.isolation import (
    is_independent_isolating,
    is_isolating,
    is_total_dominating,
    partition_verdicts,
)
from isoset.utils.logger import get_logger

logger = get_logger(__name__)

MODES = ("ii", "i", "gt", "disjoint")


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("exact", help="solve exactly")
    parser.add_argument("-i", "--input", required=True)
    parser.add_argument("--mode", required=True, choices=MODES)
    parser.add_argument("--k", type=int, help="number of sets for --mode disjoint")
    parser.add_argument("--partition", action="store_true", help="require the sets to cover V")
    parser.add_argument("--budget", type=int, help="node budget (default: EXACT_NODE_BUDGET)")
    parser.add_argument("--method", choices=METHODS, default="auto")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, out: Output) -> int:
    clock = Stopwatch()
    graph = load_graph(args.input)
    instance = summarize(graph, source=args.input)

    if args.mode == "disjoint":
        if args.k is None:
            raise BadParameter("--k is required for --mode disjoint")
        result = search_disjoint_sets(graph, args.k, args.partition, args.budget)
        if result.sets is None:
            report = RunReport(
                command=f"exact disjoint {args.k}", instance=instance, verdict=True,
                detail="absent (proven)", budget_status="ok", nodes_explored=result.nodes_explored,
                elapsed_seconds=clock.elapsed,
            )
        else:
            verdicts = partition_verdicts(graph, result.sets, args.k, require_cover=args.partition)
            failed = [claim for claim, ok in verdicts.items() if not ok]
            if failed:
                raise VerificationFailed(failed)
            report = RunReport(
                command=f"exact disjoint {args.k}", instance=instance, verdict=True,
                partition=[vertex_list(s) for s in result.sets], detail="found",
                budget_status="ok", nodes_explored=result.nodes_explored, elapsed_seconds=clock.elapsed,
            )
        out.report(report)
        return 0

    solver, check = {
        "ii": (iota_independent, is_independent_isolating),
        "i": (iota, is_isolating),
        "gt": (total_domination_number, is_total_dominating),
    }[args.mode]
    result = solver(graph, budget=args.budget, method=args.method)
    verified = check(graph, result.witness)
    if not verified:
        raise VerificationFailed([f"{args.mode} witness {result.witness}"])
    out.report(RunReport(
        command=f"exact {args.mode}", instance=instance, method=result.method, value=result.value,
        witness=vertex_list(result.witness), verdict=verified, budget_status="ok",
        nodes_explored=result.nodes_explored, elapsed_seconds=clock.elapsed,
    ))
    return 0
