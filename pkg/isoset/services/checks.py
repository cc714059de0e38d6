"""
Invariant checks run by `isoset bench`

Each check takes one instance and returns a CheckOutcome. Exact comparisons
only run on instances small enough for the oracle.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence

from numpy.random import PCG64, Generator

from isoset.exceptions import AlgorithmStalled, BoundViolated, BudgetExceeded, IsosetError
from isoset.models.reports import CheckOutcome, fraction_text
from isoset.services.coloring import k_coloring
from isoset.services.constructive import (
    bipartite_partition3,
    bound_for,
    eliminate_bad_edges,
    k_colorable_bound,
    two_disjoint,
    verify_claim_bounds,
)
from isoset.services.exact import iota_independent, search_disjoint_sets, total_domination_number
from isoset.services.gadgets import operation_O
from isoset.services.generators import RandomGraphSpec
from isoset.services.graph_core import Coloring, Graph, is_bipartite, is_independent
from isoset.services.isolation import (
    bad_edges,
    is_independent_dominating,
    is_independent_isolating,
    verify_partition,
)
from isoset.utils.logger import get_logger

logger = get_logger(__name__)

EXACT_CHECK_MAX_N = 14


@dataclass(frozen=True)
class CheckContext:
    seed: int
    spec: Optional[RandomGraphSpec] = None

    def planted_coloring(self) -> Optional[Coloring]:
        if self.spec is not None and self.spec.family == "kpartite":
            return self.spec.planted_coloring()
        return None


def _skip(name: str, detail: str) -> CheckOutcome:
    return CheckOutcome(name=name, passed=True, skipped=True, detail=detail)


def check_half_total_domination(g: Graph, ctx: CheckContext) -> CheckOutcome:
    """Independent isolation number at most half the total domination number, small bipartite graphs"""
    if g.n > EXACT_CHECK_MAX_N or not is_bipartite(g):
        return _skip("half_total_domination", "needs a bipartite graph on at most 14 vertices")
    ii = iota_independent(g).value
    gamma_t = total_domination_number(g).value
    return CheckOutcome(
        name="half_total_domination", passed=2 * ii <= gamma_t, detail=f"iota_i={ii} gamma_t={gamma_t}",
        witness_size=ii, bound=fraction_text(Fraction(gamma_t, 2)),
    )


def check_bipartite_partition(g: Graph, ctx: CheckContext) -> CheckOutcome:
    sets = bipartite_partition3(g)
    return CheckOutcome(
        name="bipartite_partition", passed=verify_partition(g, sets, 3),
        detail="sizes " + "/".join(str(len(s)) for s in sets),
    )


def check_bipartite_bound(g: Graph, ctx: CheckContext) -> CheckOutcome:
    smallest = min(len(s) for s in bipartite_partition3(g))
    return CheckOutcome(
        name="bipartite_bound", passed=smallest <= g.n // 3, witness_size=smallest,
        bound=fraction_text(bound_for("bipartite", g.n)),
    )


def check_sweep_bound(g: Graph, ctx: CheckContext) -> CheckOutcome:
    coloring = ctx.planted_coloring()
    if coloring is None or coloring.k != 3:
        coloring = k_coloring(g, 3)
        if coloring is None:
            return _skip("sweep_bound", "graph is not 3-colorable")
    outcome = eliminate_bad_edges(g, coloring, checked=True)
    problems: List[str] = []
    remaining = bad_edges(g, outcome.final_coloring).edge_pairs()
    if remaining and (outcome.pivot is None or any(outcome.pivot not in pair for pair in remaining)):
        problems.append("bad edges avoid the pivot")
    if not all(is_independent_isolating(g, s) for s in outcome.sets):
        problems.append("an output set fails to verify")
    smallest = min(len(s) for s in outcome.sets)
    if smallest > (g.n + 1) // 3:
        problems.append(f"smallest set {smallest} above (n+1)/3")
    if g.n <= EXACT_CHECK_MAX_N and smallest < iota_independent(g).value:
        problems.append("witness below the exact value")
    return CheckOutcome(
        name="sweep_bound", passed=not problems,
        detail="; ".join(problems) or f"{len(outcome.trace)} sweeps",
        witness_size=smallest, bound=fraction_text(bound_for("sweep", g.n)),
    )


def check_grundy_bound(g: Graph, ctx: CheckContext) -> CheckOutcome:
    certificate = k_colorable_bound(g, ctx.planted_coloring())
    size = len(certificate.witness)
    problems: List[str] = []
    if not certificate.verified:
        problems.append("witness fails to verify")
    if size > certificate.bound:
        problems.append(f"witness {size} above bound")
    if certificate.stats is not None and not verify_claim_bounds(g, certificate.stats):
        problems.append("a claim bound fails")
    if g.n <= EXACT_CHECK_MAX_N and size < iota_independent(g).value:
        problems.append("witness below the exact value")
    return CheckOutcome(
        name="grundy_bound", passed=not problems, detail="; ".join(problems) or certificate.provenance,
        witness_size=size, bound=fraction_text(certificate.bound),
    )


def check_two_disjoint(g: Graph, ctx: CheckContext) -> CheckOutcome:
    first, second = two_disjoint(g)
    passed = (
        not (first & second)
        and is_independent_dominating(g, first)
        and is_independent(g, second)
        and is_independent_isolating(g, second)
    )
    return CheckOutcome(name="two_disjoint", passed=passed, detail=f"|X|={len(first)} |Y|={len(second)}")


def check_operation_o(g: Graph, ctx: CheckContext) -> CheckOutcome:
    if g.n > EXACT_CHECK_MAX_N:
        return _skip("operation_o", "needs at most 14 vertices")
    x = int(Generator(PCG64(ctx.seed)).integers(0, g.n))
    before = iota_independent(g).value
    after = iota_independent(operation_O(g, x)).value
    return CheckOutcome(
        name="operation_o", passed=after == before + 1, detail=f"x={x} {before}->{after}", witness_size=after,
    )


def check_four_sets(g: Graph, ctx: CheckContext) -> CheckOutcome:
    result = search_disjoint_sets(g, 4, require_partition=True)
    passed = result.sets is not None and verify_partition(g, result.sets, 4)
    return CheckOutcome(name="four_sets", passed=passed, detail=f"{result.nodes_explored} nodes")


def check_oracle(g: Graph, ctx: CheckContext) -> CheckOutcome:
    if g.n > EXACT_CHECK_MAX_N:
        return _skip("oracle", "needs at most 14 vertices")
    naive = iota_independent(g, method="naive").value
    searched = iota_independent(g, method="branch_and_bound").value
    return CheckOutcome(name="oracle", passed=naive == searched, detail=f"naive={naive} bnb={searched}")


CHECKS: Dict[str, Callable[[Graph, CheckContext], CheckOutcome]] = {
    "half_total_domination": check_half_total_domination,
    "bipartite_partition": check_bipartite_partition,
    "bipartite_bound": check_bipartite_bound,
    "sweep_bound": check_sweep_bound,
    "grundy_bound": check_grundy_bound,
    "two_disjoint": check_two_disjoint,
    "operation_o": check_operation_o,
    "four_sets": check_four_sets,
    "oracle": check_oracle,
}


def run_check(name: str, g: Graph, ctx: CheckContext) -> CheckOutcome:
    """Run one check; errors become failed outcomes instead of aborting the batch"""
    try:
        return CHECKS[name](g, ctx)
    except (AlgorithmStalled, BoundViolated) as e:
        logger.warning(f"{name} stalled on seed {ctx.seed}: {e}")
        return CheckOutcome(name=name, passed=False, stalled=True, detail=str(e))
    except BudgetExceeded as e:
        return CheckOutcome(name=name, passed=False, detail=str(e))
    except IsosetError as e:
        return CheckOutcome(name=name, passed=False, detail=f"{type(e).__name__}: {e}")


def run_checks(g: Graph, names: Sequence[str], ctx: CheckContext) -> List[CheckOutcome]:
    return [run_check(name, g, ctx) for name in names]
