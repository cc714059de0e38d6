"""
Isolation verifiers for isoset

The definitions every certificate is checked against: closed neighborhoods,
(independent) isolating sets, fully dominated vertices and bad edges.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from isoset.exceptions import WrongK
from isoset.services.coloring import require_total_proper
from isoset.services.graph_core import (
    Coloring,
    Graph,
    VertexSet,
    closed_neighborhood_mask,
    is_dominating,
    is_independent,
)
from isoset.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class BadEdge:
    u: int
    v: int
    missing_color: int


@dataclass(frozen=True)
class BadEdgeReport:
    """Bad edges in ascending (min, max) order plus per-class verdicts for colors 1..3"""

    edges: Tuple[BadEdge, ...]
    class_isolating: Tuple[bool, bool, bool]

    @property
    def count(self) -> int:
        return len(self.edges)

    def edge_pairs(self) -> List[Tuple[int, int]]:
        return [(e.u, e.v) for e in self.edges]


def closed_neighborhood(g: Graph, s: VertexSet) -> VertexSet:
    g.check_subset(s)
    return VertexSet(closed_neighborhood_mask(g, s.mask))


def _remainder_is_edgeless(g: Graph, remainder: int) -> bool:
    for v in VertexSet(remainder):
        if g.masks[v] & remainder:
            return False
    return True


def is_isolating(g: Graph, s: VertexSet) -> bool:
    """Every edge has an end in N[s]; the empty set isolates only edgeless graphs"""
    covered = closed_neighborhood_mask(g, s.mask)
    return _remainder_is_edgeless(g, ((1 << g.n) - 1) & ~covered)


def is_independent_isolating(g: Graph, s: VertexSet) -> bool:
    return is_independent(g, s) and is_isolating(g, s)


def is_independent_dominating(g: Graph, s: VertexSet) -> bool:
    return is_independent(g, s) and is_dominating(g, s)


def fully_dominated_vertices(g: Graph, c: Coloring) -> VertexSet:
    """Vertices whose closed neighborhood shows every color 1..k"""
    everything = set(range(1, c.k + 1))
    chosen = []
    for v in range(g.n):
        seen = {c[w] for w in g.adjacency[v]}
        seen.add(c[v])
        if everything <= seen:
            chosen.append(v)
    return VertexSet.of(chosen)


def bad_edges(g: Graph, c: Coloring) -> BadEdgeReport:
    """
    Edges whose missing color appears on no neighbor of either end.

    Requires a total proper 3-coloring.
    """
    if c.k != 3:
        raise WrongK(c.k, 3)
    require_total_proper(g, c)
    class_masks = [0, 0, 0, 0]
    for v, color in enumerate(c.colors):
        class_masks[color] |= 1 << v
    found = []
    for u, v in g.edges():
        missing = 6 - c[u] - c[v]
        if (g.masks[u] | g.masks[v]) & class_masks[missing] == 0:
            found.append(BadEdge(u, v, missing))
    verdicts = tuple(all(e.missing_color != color for e in found) for color in (1, 2, 3))
    return BadEdgeReport(edges=tuple(found), class_isolating=verdicts)  # type: ignore[arg-type]


def classes_are_isolating(g: Graph, c: Coloring) -> List[bool]:
    require_total_proper(g, c)
    return [is_isolating(g, cls) for cls in c.classes()]


def partition_verdicts(
    g: Graph, sets: Sequence[VertexSet], k: Optional[int] = None, require_cover: bool = True
) -> Dict[str, bool]:
    """Per-claim verdicts for a claimed family of disjoint independent isolating sets"""
    union = 0
    disjoint = True
    for s in sets:
        g.check_subset(s)
        if union & s.mask:
            disjoint = False
        union |= s.mask
    verdicts = {
        "count": k is None or len(sets) == k,
        "disjoint": disjoint,
        "independent": all(is_independent(g, s) for s in sets),
        "isolating": all(is_isolating(g, s) for s in sets),
    }
    if require_cover:
        verdicts["covers"] = union == (1 << g.n) - 1
    return verdicts


def verify_partition(
    g: Graph, sets: Sequence[VertexSet], k: Optional[int] = None, require_cover: bool = True
) -> bool:
    return all(partition_verdicts(g, sets, k, require_cover).values())


def sweep_domination_violations(
    g: Graph, after: Coloring, d_set: VertexSet, arcs: Sequence[Tuple[int, int]], w: int
) -> VertexSet:
    """
    Vertices that must be fully dominated right after a rotation-sweep but
    are not: members of D with both an in- and an out-arc, and outsiders
    other than w with a neighbor in D.
    """
    heads = {y for _, y in arcs}
    tails = {x for x, _ in arcs}
    must = [x for x in d_set if x in heads and x in tails]
    outside = d_set.complement(g.n)
    must.extend(y for y in outside if y != w and g.masks[y] & d_set.mask)
    dominated = fully_dominated_vertices(g, after)
    return VertexSet.of(v for v in must if v not in dominated)


def is_total_dominating(g: Graph, s: VertexSet) -> bool:
    """Every vertex, members of s included, has a neighbor in s"""
    return all(g.masks[v] & s.mask for v in range(g.n))
