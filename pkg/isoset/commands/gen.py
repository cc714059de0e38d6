"""
gen: write a random or named-family graph as an edge list
"""

import argparse
import sys
from pathlib import Path

from isoset.commands.common import Output, Stopwatch, int_list, load_graph, summarize
from isoset.exceptions import BadParameter
from isoset.models.reports import RunReport
from isoset.services.gadgets import gen_jewel, gen_M, gen_p2_corona
from isoset.services.generators import FAMILIES, gen_random, make_spec
from isoset.services.graph_io import format_edge_list
from isoset.utils.logger import get_logger

logger = get_logger(__name__)

NAMED_FAMILIES = ("M", "jewel", "p2corona")


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("gen", help="generate a graph")
    parser.add_argument("--family", required=True, choices=FAMILIES + NAMED_FAMILIES)
    parser.add_argument("--n", type=int, help="order of a random graph")
    parser.add_argument("--k", type=int, help="number of parts (kpartite)")
    parser.add_argument("--sizes", type=int_list, help="part sizes, e.g. 2,2,3")
    parser.add_argument("--p", type=float, default=0.5, help="edge probability")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--disconnected", action="store_true", help="skip the connectivity resampling")
    parser.add_argument("--r", type=int, help="clique order of M_r")
    parser.add_argument("--m", type=int, help="index of the jewel J_m")
    parser.add_argument("-i", "--input", help="base graph of the P2-corona")
    parser.add_argument("-o", "--output", help="edge-list file (stdout when omitted)")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, out: Output) -> int:
    clock = Stopwatch()
    family = args.family
    seed = None
    comments = [f"family {family}"]
    if family == "M":
        if args.r is None:
            raise BadParameter("--r is required for M")
        graph, known = gen_M(args.r)
        comments.append(f"iota_independent {known.iota_independent}")
    elif family == "jewel":
        if args.m is None:
            raise BadParameter("--m is required for jewel")
        graph, known = gen_jewel(args.m)
        comments.append(f"iota_independent {known.iota_independent}")
    elif family == "p2corona":
        if args.input is None:
            raise BadParameter("-i is required for p2corona")
        graph, known = gen_p2_corona(load_graph(args.input))
        if known.iota is not None:
            comments.append(f"iota {known.iota}")
    else:
        params = {"n": args.n, "k": args.k, "sizes": args.sizes, "p": args.p,
                  "connected": not args.disconnected}
        spec = make_spec(family, **{key: value for key, value in params.items() if value is not None})
        graph = gen_random(spec, args.seed)
        seed = args.seed
        comments.append(f"seed {seed}")

    text = format_edge_list(graph, comments)
    if args.output is None:
        sys.stdout.write(text)
        return 0
    Path(args.output).write_text(text, encoding="utf-8", newline="\n")
    logger.info(f"Wrote {family} graph n={graph.n} m={graph.m} to {args.output}")
    out.report(RunReport(
        command="gen", instance=summarize(graph, source=args.output, family=family, seed=seed),
        elapsed_seconds=clock.elapsed,
    ))
    return 0
