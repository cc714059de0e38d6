"""
bound: constructive upper bounds with certificates
"""

import argparse
from datetime import datetime
from pathlib import Path
from typing import Optional

from config.settings import ensure_trace_dir
from isoset.commands.common import Output, Stopwatch, load_graph, summarize
from isoset.exceptions import AlgorithmStalled, BoundViolated, BudgetExceeded, VerificationFailed
from isoset.models.reports import RunReport, fraction_text, vertex_list
from isoset.services.coloring import k_coloring
from isoset.services.constructive import (
    Certificate,
    bipartite_bound,
    format_stall,
    format_trace,
    k_colorable_bound,
    tripartite_bound,
)
from isoset.services.graph_core import Coloring, Graph, is_bipartite
from isoset.utils.logger import get_logger

logger = get_logger(__name__)

METHODS = ("bipartite", "sweep", "grundy", "auto")


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("bound", help="constructive upper bound")
    parser.add_argument("-i", "--input", required=True)
    parser.add_argument("--method", choices=METHODS, default="auto")
    parser.add_argument("--trace", help="write the rotation-sweep trace here")
    parser.set_defaults(handler=run)


def pick_method(g: Graph) -> tuple:
    """bipartite, else sweep when a 3-coloring is found within budget, else grundy"""
    if is_bipartite(g):
        return "bipartite", None
    try:
        coloring = k_coloring(g, 3)
    except BudgetExceeded:
        logger.info("3-coloring search ran out of budget, falling back to grundy")
        return "grundy", None
    if coloring is not None:
        return "sweep", coloring
    return "grundy", None


def certify(g: Graph, method: str, coloring: Optional[Coloring] = None) -> Certificate:
    if method == "auto":
        method, coloring = pick_method(g)
    if method == "bipartite":
        return bipartite_bound(g)
    if method == "sweep":
        return tripartite_bound(g, coloring)
    return k_colorable_bound(g)


def archive_stall(error: AlgorithmStalled, target: Optional[str]) -> Path:
    if target is not None:
        path = Path(target)
    else:
        stamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        path = ensure_trace_dir() / f"stall_{stamp}.txt"
    path.write_text(format_stall(error), encoding="utf-8", newline="\n")
    return path


def run(args: argparse.Namespace, out: Output) -> int:
    clock = Stopwatch()
    graph = load_graph(args.input)
    try:
        certificate = certify(graph, args.method)
    except (AlgorithmStalled, BoundViolated) as e:
        if isinstance(e, AlgorithmStalled):
            path = archive_stall(e, args.trace)
            logger.error(f"Sweep trace archived at {path}")
        raise

    if not certificate.verified:
        raise VerificationFailed([f"{certificate.method} witness {certificate.witness}"])
    if args.trace is not None:
        text = format_trace(certificate.outcome) if certificate.outcome is not None else "# no sweeps\n"
        Path(args.trace).write_text(text, encoding="utf-8", newline="\n")

    out.report(RunReport(
        command="bound", instance=summarize(graph, source=args.input), method=certificate.method,
        value=len(certificate.witness), witness=vertex_list(certificate.witness),
        bound=fraction_text(certificate.bound), verdict=certificate.verified,
        detail=certificate.provenance, elapsed_seconds=clock.elapsed,
    ))
    return 0
