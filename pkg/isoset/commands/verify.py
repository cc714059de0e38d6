"""
verify: check a claimed set or partition against a graph
"""

import argparse
from pathlib import Path

from isoset.commands.common import Output, Stopwatch, load_graph, summarize
from isoset.exceptions import BadParameter
from isoset.models.reports import RunReport, vertex_list
from isoset.services.error_handler import EXIT_OK, EXIT_VERIFICATION
from isoset.services.graph_core import is_independent
from isoset.services.graph_io import parse_partition, parse_vertex_set
from isoset.services.isolation import is_isolating, partition_verdicts
from isoset.utils.logger import get_logger

logger = get_logger(__name__)

CLAIMS = ("independent", "isolating", "both", "partition")


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("verify", help="verify a set or partition")
    parser.add_argument("-i", "--input", required=True)
    parser.add_argument("--set", dest="set_file", help="set file, one vertex id per line")
    parser.add_argument("--partition", dest="partition_file", help="partition file, one set per line")
    parser.add_argument("--claim", required=True, choices=CLAIMS)
    parser.add_argument("--k", type=int, help="expected number of sets for --claim partition")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, out: Output) -> int:
    clock = Stopwatch()
    graph = load_graph(args.input)
    instance = summarize(graph, source=args.input)

    if args.claim == "partition":
        if args.partition_file is None:
            raise BadParameter("--partition is required for --claim partition")
        sets = parse_partition(Path(args.partition_file).read_text(encoding="utf-8"), graph.n)
        verdicts = partition_verdicts(graph, sets, args.k)
        report = RunReport(command="verify partition", instance=instance,
                           partition=[vertex_list(s) for s in sets], verdicts=verdicts)
    else:
        if args.set_file is None:
            raise BadParameter("--set is required for this claim")
        s = parse_vertex_set(Path(args.set_file).read_text(encoding="utf-8"), graph.n)
        verdicts = {}
        if args.claim in ("independent", "both"):
            verdicts["independent"] = is_independent(graph, s)
        if args.claim in ("isolating", "both"):
            verdicts["isolating"] = is_isolating(graph, s)
        report = RunReport(command=f"verify {args.claim}", instance=instance,
                           witness=vertex_list(s), verdicts=verdicts)

    report.verdict = all(verdicts.values())
    report.elapsed_seconds = clock.elapsed
    out.report(report)
    if not report.verdict:
        failed = [claim for claim, ok in verdicts.items() if not ok]
        logger.warning(f"Verification failed: {', '.join(failed)}")
        return EXIT_VERIFICATION
    return EXIT_OK
