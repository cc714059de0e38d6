"""
partition: the three independent isolating sets behind a bound
"""

import argparse

from isoset.commands.bound import archive_stall
from isoset.commands.common import Output, Stopwatch, load_graph, summarize
from isoset.exceptions import AlgorithmStalled, VerificationFailed
from isoset.models.reports import RunReport, vertex_list
from isoset.services.constructive import bipartite_partition3, tripartite_bound
from isoset.services.graph_core import is_bipartite
from isoset.services.isolation import partition_verdicts


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("partition", help="three disjoint independent isolating sets")
    parser.add_argument("-i", "--input", required=True)
    parser.add_argument("--method", choices=("bipartite", "sweep", "auto"), default="auto")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, out: Output) -> int:
    clock = Stopwatch()
    graph = load_graph(args.input)
    method = args.method
    if method == "auto":
        method = "bipartite" if is_bipartite(graph) else "sweep"
    if method == "bipartite":
        sets = bipartite_partition3(graph)
        verdicts = partition_verdicts(graph, sets, 3, require_cover=True)
    else:
        try:
            certificate = tripartite_bound(graph)
        except AlgorithmStalled as e:
            archive_stall(e, None)
            raise
        sets = certificate.partition or ()
        # the pivot may sit in two of the sets
        verdicts = partition_verdicts(graph, sets, 3, require_cover=False)
        verdicts.pop("disjoint")
    failed = [claim for claim, ok in verdicts.items() if not ok]
    if failed:
        raise VerificationFailed(failed)
    out.report(RunReport(
        command="partition", instance=summarize(graph, source=args.input), method=method,
        partition=[vertex_list(s) for s in sets], verdicts=verdicts, verdict=True,
        elapsed_seconds=clock.elapsed,
    ))
    return 0
