"""
Exact solvers for isoset

Ground-truth oracles: the independent isolation number, the isolation number,
the total domination number, and the search for k disjoint independent
isolating sets. Witnesses are canonical (lexicographically least optimal set)
so results do not depend on the run.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, List, Optional, Tuple

from config.settings import settings
from isoset.exceptions import BadParameter, BudgetExceeded, IsolatedVertex
from isoset.services.graph_core import (
    Graph,
    VertexSet,
    greedy_independent_set,
    is_independent,
)
from isoset.services.isolation import is_isolating
from isoset.utils.logger import get_logger

logger = get_logger(__name__)

METHODS = ("auto", "naive", "branch_and_bound")


@dataclass(frozen=True)
class ExactResult:
    value: int
    witness: VertexSet
    nodes_explored: int
    method: str = "branch_and_bound"


@dataclass(frozen=True)
class DisjointSetsResult:
    """`sets` is None when the search proved that no such family exists"""

    sets: Optional[Tuple[VertexSet, ...]]
    nodes_explored: int

    @property
    def found(self) -> bool:
        return self.sets is not None


def _popcount_edges(g: Graph, region: int) -> int:
    """Number of edges with both ends inside `region`"""
    twice = 0
    for v in VertexSet(region):
        twice += (g.masks[v] & region).bit_count()
    return twice // 2


class _Objective:
    """Covering objective driven by the subset search"""

    def gain(self, g: Graph, v: int) -> int:
        raise NotImplementedError

    def cover(self, g: Graph, v: int) -> int:
        raise NotImplementedError

    def status(self, g: Graph, covered: int) -> Tuple[int, int]:
        """(deficit, mask of vertices able to fix the first uncovered item)"""
        raise NotImplementedError


class _IsolationObjective(_Objective):
    """Cover every edge by N[S]"""

    def gain(self, g: Graph, v: int) -> int:
        closed = g.masks[v] | 1 << v
        full = (1 << g.n) - 1
        return g.m - _popcount_edges(g, full & ~closed)

    def cover(self, g: Graph, v: int) -> int:
        return g.masks[v] | 1 << v

    def status(self, g: Graph, covered: int) -> Tuple[int, int]:
        remainder = ((1 << g.n) - 1) & ~covered
        deficit = _popcount_edges(g, remainder)
        if deficit == 0:
            return 0, 0
        for u in VertexSet(remainder):
            inside = g.masks[u] & remainder
            if inside:
                w = (inside & -inside).bit_length() - 1
                return deficit, g.masks[u] | g.masks[w] | 1 << u | 1 << w
        return deficit, 0


class _TotalDominationObjective(_Objective):
    """Give every vertex a neighbor in S"""

    def gain(self, g: Graph, v: int) -> int:
        return len(g.adjacency[v])

    def cover(self, g: Graph, v: int) -> int:
        return g.masks[v]

    def status(self, g: Graph, covered: int) -> Tuple[int, int]:
        remainder = ((1 << g.n) - 1) & ~covered
        if remainder == 0:
            return 0, 0
        first = (remainder & -remainder).bit_length() - 1
        return remainder.bit_count(), g.masks[first]


class SubsetSearch:
    """
    Minimum-size covering set by increasing size, depth-first over ascending
    ids. The first hit at the smallest feasible size is the lexicographically
    least optimal witness.

    Pruning: the remaining picks times the largest per-vertex gain must reach
    the deficit, and the first uncovered item must still be fixable by a
    vertex at or after the current position.
    """

    def __init__(
        self,
        g: Graph,
        objective: _Objective,
        independent: bool,
        budget: int,
        upper_bound: int,
    ):
        self.g = g
        self.objective = objective
        self.independent = independent
        self.budget = budget
        self.upper_bound = upper_bound
        self.nodes = 0
        gains = [objective.gain(g, v) for v in range(g.n)]
        self.suffix_max_gain = [0] * (g.n + 1)
        for v in range(g.n - 1, -1, -1):
            self.suffix_max_gain[v] = max(gains[v], self.suffix_max_gain[v + 1])

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(self.nodes, best_bound=self.upper_bound)

    def _extend(self, chosen: int, covered: int, forbidden: int, start: int, remaining: int) -> Optional[int]:
        self._tick()
        deficit, fixers = self.objective.status(self.g, covered)
        if deficit == 0:
            return chosen
        if remaining == 0:
            return None
        if remaining * self.suffix_max_gain[start] < deficit:
            return None
        fixers &= ~((1 << start) - 1) & ~forbidden
        if not fixers:
            return None
        last = fixers.bit_length() - 1
        for v in range(start, last + 1):
            if forbidden >> v & 1:
                continue
            next_forbidden = forbidden | (self.g.masks[v] | 1 << v if self.independent else 0)
            found = self._extend(
                chosen | 1 << v,
                covered | self.objective.cover(self.g, v),
                next_forbidden,
                v + 1,
                remaining - 1,
            )
            if found is not None:
                return found
        return None

    def run(self) -> ExactResult:
        for size in range(0, self.g.n + 1):
            found = self._extend(0, 0, 0, 0, size)
            if found is not None:
                return ExactResult(
                    value=len(VertexSet(found)),
                    witness=VertexSet(found),
                    nodes_explored=self.nodes,
                )
        raise AssertionError("the full vertex set always covers")


def _naive(
    g: Graph, accept: Callable[[VertexSet], bool], budget: int, upper_bound: int
) -> ExactResult:
    """Plain enumeration in increasing size; combinations() yields lexicographic order"""
    nodes = 0
    for size in range(0, g.n + 1):
        for combo in combinations(range(g.n), size):
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(nodes, best_bound=upper_bound)
            s = VertexSet.of(combo)
            if accept(s):
                return ExactResult(value=size, witness=s, nodes_explored=nodes, method="naive")
    raise AssertionError("the full vertex set always covers")


def _resolve(method: str, n: int) -> str:
    if method not in METHODS:
        raise BadParameter(f"unknown method {method!r}, expected one of {METHODS}")
    if method == "auto":
        return "naive" if n <= settings.NAIVE_MAX_N else "branch_and_bound"
    return method


def _solve(
    g: Graph,
    objective: _Objective,
    independent: bool,
    accept: Callable[[VertexSet], bool],
    upper_bound: int,
    budget: Optional[int],
    method: str,
    label: str,
) -> ExactResult:
    if budget is None:
        budget = settings.EXACT_NODE_BUDGET
    chosen = _resolve(method, g.n)
    logger.info(f"Solving {label} on n={g.n}, m={g.m} ({chosen})")
    try:
        if chosen == "naive":
            result = _naive(g, accept, budget, upper_bound)
        else:
            result = SubsetSearch(g, objective, independent, budget, upper_bound).run()
    except BudgetExceeded as e:
        logger.warning(f"{label}: {e}")
        raise
    logger.info(f"{label} = {result.value} after {result.nodes_explored} nodes")
    return result


def iota_independent(g: Graph, budget: Optional[int] = None, method: str = "auto") -> ExactResult:
    """Minimum independent isolating set"""
    upper = len(greedy_independent_set(g))
    return _solve(
        g,
        _IsolationObjective(),
        True,
        lambda s: is_independent(g, s) and is_isolating(g, s),
        upper,
        budget,
        method,
        "independent isolation number",
    )


def iota(g: Graph, budget: Optional[int] = None, method: str = "auto") -> ExactResult:
    """Minimum isolating set, no independence constraint"""
    upper = len(greedy_independent_set(g))
    return _solve(
        g, _IsolationObjective(), False, lambda s: is_isolating(g, s), upper, budget, method, "isolation number"
    )


def total_domination_number(g: Graph, budget: Optional[int] = None, method: str = "auto") -> ExactResult:
    """Minimum set S with every vertex adjacent to S"""
    for v in range(g.n):
        if not g.adjacency[v]:
            raise IsolatedVertex(v)
    full = (1 << g.n) - 1
    upper = len(VertexSet.of(g.adjacency[v][0] for v in range(g.n)))
    return _solve(
        g,
        _TotalDominationObjective(),
        False,
        lambda s: _open_neighborhood_mask(g, s.mask) == full,
        upper,
        budget,
        method,
        "total domination number",
    )


def _open_neighborhood_mask(g: Graph, mask: int) -> int:
    covered = 0
    for v in VertexSet(mask):
        covered |= g.masks[v]
    return covered


class DisjointSetsSearch:
    """
    Backtracking label assignment for k disjoint independent isolating sets.

    Label 0 means "in no set" (forbidden when a partition is required),
    labels 1..k name the sets. The constraints live on edge regions
    N[u] ∪ N[v]: every region must end up showing all k labels. A region is
    dead when it misses more labels than it has unlabeled vertices, and tight
    when the two counts are equal, which forces its unlabeled vertices onto
    the missing labels (this is what settles the leaf trios of gadget graphs
    without branching). Vertices are labeled by decreasing degree and a
    fresh label is opened at most one at a time.
    """

    def __init__(self, g: Graph, k: int, require_partition: bool, budget: int):
        self.g = g
        self.k = k
        self.require_partition = require_partition
        self.budget = budget
        self.nodes = 0
        self.order = sorted(range(g.n), key=lambda v: (-len(g.adjacency[v]), v))
        self.labels = [-1] * g.n
        regions = [g.masks[u] | g.masks[v] | 1 << u | 1 << v for u, v in g.edges()]
        self.region_unlabeled = [mask.bit_count() for mask in regions]
        self.region_counts = [[0] * (k + 1) for _ in regions]
        self.region_missing = [k] * len(regions)
        self.vertex_regions: List[List[int]] = [[] for _ in range(g.n)]
        for index, mask in enumerate(regions):
            for v in VertexSet(mask):
                self.vertex_regions[v].append(index)
        self.neighbor_label_counts = [[0] * (k + 1) for _ in range(g.n)]

    def _allowed(self, v: int, used: int) -> List[int]:
        forced_missing: Optional[set] = None
        for r in self.vertex_regions[v]:
            if self.region_missing[r] and self.region_missing[r] == self.region_unlabeled[r]:
                missing = {l for l in range(1, self.k + 1) if self.region_counts[r][l] == 0}
                forced_missing = missing if forced_missing is None else forced_missing & missing
        fresh_limit = min(self.k, used + 1)
        counts = self.neighbor_label_counts[v]
        labels = [l for l in range(1, fresh_limit + 1) if counts[l] == 0]
        if forced_missing is not None:
            labels = [l for l in labels if l in forced_missing]
        elif not self.require_partition:
            labels.append(0)
        return labels

    def _assign(self, v: int, label: int) -> bool:
        self.labels[v] = label
        feasible = True
        for r in self.vertex_regions[v]:
            self.region_unlabeled[r] -= 1
            if label:
                if self.region_counts[r][label] == 0:
                    self.region_missing[r] -= 1
                self.region_counts[r][label] += 1
            if self.region_missing[r] > self.region_unlabeled[r]:
                feasible = False
        if label:
            for w in self.g.adjacency[v]:
                self.neighbor_label_counts[w][label] += 1
        return feasible

    def _unassign(self, v: int) -> None:
        label = self.labels[v]
        self.labels[v] = -1
        for r in self.vertex_regions[v]:
            self.region_unlabeled[r] += 1
            if label:
                self.region_counts[r][label] -= 1
                if self.region_counts[r][label] == 0:
                    self.region_missing[r] += 1
        if label:
            for w in self.g.adjacency[v]:
                self.neighbor_label_counts[w][label] -= 1

    def _search(self, position: int, used: int) -> bool:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(self.nodes)
        if position == len(self.order):
            return True
        v = self.order[position]
        for label in self._allowed(v, used):
            if self._assign(v, label) and self._search(position + 1, max(used, label)):
                return True
            self._unassign(v)
        return False

    def run(self) -> DisjointSetsResult:
        if self._search(0, 0):
            masks = [0] * (self.k + 1)
            for v, label in enumerate(self.labels):
                masks[label] |= 1 << v
            sets = sorted(
                (VertexSet(mask) for mask in masks[1:]),
                key=lambda s: (not s, s.sort_key()),
            )
            return DisjointSetsResult(sets=tuple(sets), nodes_explored=self.nodes)
        return DisjointSetsResult(sets=None, nodes_explored=self.nodes)


def search_disjoint_sets(
    g: Graph, k: int, require_partition: bool = False, budget: Optional[int] = None
) -> DisjointSetsResult:
    """
    k pairwise-disjoint independent isolating sets (covering V when a
    partition is required). Raises BudgetExceeded when the search could not
    decide; a result with `sets=None` is a proof of absence.
    """
    if k < 1:
        raise BadParameter(f"k must be at least 1, got {k}")
    if budget is None:
        budget = settings.EXACT_NODE_BUDGET
    search = DisjointSetsSearch(g, k, require_partition, budget)
    try:
        result = search.run()
    except BudgetExceeded as e:
        logger.warning(f"disjoint sets search (k={k}): {e}")
        raise
    outcome = "found" if result.found else "proven absent"
    logger.info(f"{k} disjoint independent isolating sets on n={g.n}: {outcome} after {result.nodes_explored} nodes")
    return result


def disjoint_independent_isolating_sets(
    g: Graph, k: int, require_partition: bool = False, budget: Optional[int] = None
) -> Optional[List[VertexSet]]:
    result = search_disjoint_sets(g, k, require_partition, budget)
    return list(result.sets) if result.sets is not None else None
