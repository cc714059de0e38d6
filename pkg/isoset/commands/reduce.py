"""
reduce: build J(G) with its sidecar map, or apply Operation O at one vertex
"""

import argparse
from pathlib import Path

from isoset.commands.common import Output, Stopwatch, load_graph, summarize
from isoset.exceptions import BadParameter
from isoset.models.reports import RunReport
from isoset.services.gadgets import build_J, operation_O_with_ids
from isoset.services.graph_io import format_gadget_map, write_graph
from isoset.utils.logger import get_logger

logger = get_logger(__name__)


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("reduce", help="apply a gadget construction")
    parser.add_argument("--gadget", required=True, choices=("J", "O"))
    parser.add_argument("-i", "--input", required=True)
    parser.add_argument("-o", "--output", required=True)
    parser.add_argument("--map", help="sidecar map file for J (default: <output>.map)")
    parser.add_argument("--vertex", type=int, help="vertex x for Operation O")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, out: Output) -> int:
    clock = Stopwatch()
    graph = load_graph(args.input)
    if args.gadget == "J":
        result, gadget_map = build_J(graph)
        map_path = Path(args.map or f"{args.output}.map")
        map_path.write_text(format_gadget_map(gadget_map), encoding="utf-8", newline="\n")
        detail = f"map: {map_path}"
        comments = [f"J(G) of {args.input}"]
    else:
        if args.vertex is None:
            raise BadParameter("--vertex is required for Operation O")
        result, (clone, y, y_prime) = operation_O_with_ids(graph, args.vertex)
        detail = f"added x'={clone} y={y} y'={y_prime}"
        comments = [f"Operation O at {args.vertex} of {args.input}"]
    write_graph(args.output, result, comments)
    logger.info(f"{args.gadget}: n={graph.n} -> n={result.n}, written to {args.output}")
    out.report(RunReport(
        command=f"reduce {args.gadget}", instance=summarize(result, source=args.output),
        detail=detail, elapsed_seconds=clock.elapsed,
    ))
    return 0
