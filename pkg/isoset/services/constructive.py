"""
Constructive algorithms for isoset

Each entry point returns a Certificate whose witness has been re-checked with
the isolation verifiers:

  two_disjoint           independent dominating set + isolating set of the rest
  bipartite_partition3   distance-mod-3 partition of a connected bipartite graph
  eliminate_bad_edges    rotation-sweeps on a 3-coloring until the bad edges
                         (if any) share one vertex
  k_colorable_bound      three candidates built from a Grundy coloring
"""

from dataclasses import dataclass, field, replace
from fractions import Fraction
from heapq import heappop, heappush
from typing import Dict, List, Optional, Sequence, Tuple

from config.settings import settings
from isoset.exceptions import (
    AlgorithmStalled,
    BoundViolated,
    Disconnected,
    NotBadEdge,
    Not3Colorable,
    NotBipartite,
    TooSmall,
    UnassignedVertex,
    WrongK,
)
from isoset.services.coloring import (
    greedy_grundy_coloring,
    grundify,
    is_proper,
    k_coloring,
    require_total_proper,
)
from isoset.services.graph_core import (
    UNASSIGNED,
    Coloring,
    Graph,
    VertexSet,
    bfs_layers,
    closed_neighborhood_mask,
    connected_components,
    end_vertices,
    greedy_independent_set,
    induced_subgraph,
    is_bipartite,
    is_connected,
    lift,
)
from isoset.services.isolation import (
    BadEdgeReport,
    bad_edges,
    is_independent_isolating,
    sweep_domination_violations,
)
from isoset.utils.logger import get_logger

logger = get_logger(__name__)

Edge = Tuple[int, int]


def succ(color: int) -> int:
    """c + 1 modulo 3 on colors 1..3"""
    return color % 3 + 1


def pred(color: int) -> int:
    """c - 1 modulo 3 on colors 1..3"""
    return (color - 2) % 3 + 1


@dataclass(frozen=True)
class SweepState:
    """One rotation-sweep: root edge (v, w) with c(w) = c(v) + 1, the set D and its arcs"""

    pivot_edge: Edge
    d_set: VertexSet
    arcs: Tuple[Edge, ...]
    rotated: VertexSet
    bad_before: Optional[int] = None
    bad_after: Optional[int] = None

    @property
    def root(self) -> int:
        return self.pivot_edge[0]


@dataclass(frozen=True)
class SweepOutcome:
    final_coloring: Coloring
    pivot: Optional[int]
    trace: Tuple[SweepState, ...]
    sets: Tuple[VertexSet, VertexSet, VertexSet]


@dataclass(frozen=True)
class Candidate:
    claim: str
    witness: VertexSet
    m: Optional[int] = None


@dataclass(frozen=True)
class KColorableStats:
    """
    Quantities of the Grundy-coloring argument: class sizes a_1..a_k,
    h = a_1 + a_2, and x = order of the union X of the components of
    G[A_1 ∪ A_2] with at least three vertices.
    """

    n: int
    k: int
    a: Tuple[int, ...]
    h: int
    x: int
    method: str
    candidates: Tuple[Candidate, ...]
    j_sizes: Dict[int, int] = field(default_factory=dict)

    def candidate(self, claim: str) -> Optional[Candidate]:
        for candidate in self.candidates:
            if candidate.claim == claim:
                return candidate
        return None


@dataclass(frozen=True)
class Certificate:
    """A witness, the bound it was proved against, and the verifier verdict"""

    method: str
    witness: VertexSet
    bound: Fraction
    verified: bool
    provenance: str
    partition: Optional[Tuple[VertexSet, ...]] = None
    outcome: Optional[SweepOutcome] = None
    stats: Optional[KColorableStats] = None


def bound_for(method: str, n: int, k: Optional[int] = None) -> Fraction:
    """The proven upper bound each constructive method is held to"""
    if method == "bipartite":
        return Fraction(n, 3)
    if method == "sweep":
        return Fraction(n + 1, 3)
    if method == "grundy":
        if k is None or k < 4:
            raise ValueError("the Grundy bound needs k >= 4")
        return Fraction((k + 2) * n, 2 * k + 6)
    raise ValueError(f"unknown method {method!r}")


def _smallest(sets: Sequence[VertexSet]) -> VertexSet:
    return min(sets, key=lambda s: (len(s), s.sort_key()))


def _require_connected_order(g: Graph) -> None:
    if g.n < 3:
        raise TooSmall(g.n)
    if not is_connected(g):
        raise Disconnected()


# Two disjoint sets --------------------------------------------------------

def two_disjoint(g: Graph) -> Tuple[VertexSet, VertexSet]:
    """
    X: greedy independent dominating set of g; Y: greedy independent
    dominating set of g - X. Every edge keeps an end outside X, so Y isolates.
    """
    first = greedy_independent_set(g)
    second = greedy_independent_set(g, allowed=first.complement(g.n))
    return first, second


def complete_isolating(g: Graph, seed: VertexSet) -> VertexSet:
    """
    Extend an independent set to an independent isolating set by adding, for
    each component of g - N[seed] that still has an edge, the smaller of its
    two disjoint sets.
    """
    remainder = VertexSet(((1 << g.n) - 1) & ~closed_neighborhood_mask(g, seed.mask))
    rest, rest_ids = induced_subgraph(g, remainder)
    added = 0
    for component in connected_components(rest):
        if len(component) < 2:
            continue
        piece, piece_ids = induced_subgraph(rest, component)
        first, second = two_disjoint(piece)
        smaller = second if len(second) < len(first) else first
        added |= lift(lift(smaller, piece_ids), rest_ids).mask
    return VertexSet(seed.mask | added)


# Bipartite graphs ---------------------------------------------------------

def bipartite_partition3(g: Graph) -> Tuple[VertexSet, VertexSet, VertexSet]:
    """
    Color each vertex by its distance to a root modulo 3. The root is the
    least end-vertex when one exists, else vertex 0.
    """
    _require_connected_order(g)
    if not is_bipartite(g):
        raise NotBipartite()
    leaves = end_vertices(g)
    root = leaves.min() if leaves else 0
    layers = bfs_layers(g, root)
    masks = [0, 0, 0]
    for v, d in enumerate(layers.dist):
        masks[d % 3] |= 1 << v
    return VertexSet(masks[0]), VertexSet(masks[1]), VertexSet(masks[2])


def bipartite_bound(g: Graph) -> Certificate:
    partition = bipartite_partition3(g)
    witness = _smallest(partition)
    bound = bound_for("bipartite", g.n)
    if len(witness) > bound:
        raise BoundViolated(f"bipartite class of size {len(witness)} exceeds {bound}")
    verified = all(is_independent_isolating(g, s) for s in partition)
    return Certificate(
        method="bipartite",
        witness=witness,
        bound=bound,
        verified=verified,
        provenance=f"distance-mod-3 partition, sizes {[len(s) for s in partition]}",
        partition=partition,
    )


# Rotation-sweeps ----------------------------------------------------------

def _orient(c: Coloring, e: Edge) -> Edge:
    a, b = e
    if c[b] == succ(c[a]):
        return a, b
    return b, a


def build_sweep(g: Graph, c: Coloring, e: Edge) -> SweepState:
    """
    Grow D from v (the endpoint of the bad edge e with c(w) = c(v) + 1).

    A vertex y outside D joins when (i) it has a neighbor in D in G - e,
    (ii) all its neighbors in D have color c(y) - 1, and (iii) all its
    neighbors outside D have color c(y) + 1. The smallest eligible id joins
    first; on joining, y receives an arc from each of its D-neighbors in G - e.
    """
    if c.k != 3:
        raise WrongK(c.k, 3)
    require_total_proper(g, c)
    a, b = e
    g.check_vertex(a)
    g.check_vertex(b)
    if not g.has_edge(a, b):
        raise NotBadEdge(a, b)
    missing = 6 - c[a] - c[b]
    for u in g.adjacency[a] + g.adjacency[b]:
        if c[u] == missing:
            raise NotBadEdge(min(a, b), max(a, b))
    v, w = _orient(c, e)

    def excluded(x: int, y: int) -> bool:
        return (x == v and y == w) or (x == w and y == v)

    in_d = 1 << v
    arcs: List[Edge] = []
    heap: List[int] = []
    queued = set()
    for y in g.adjacency[v]:
        heappush(heap, y)
        queued.add(y)

    while heap:
        y = heappop(heap)
        queued.discard(y)
        if in_d >> y & 1:
            continue
        color = c[y]
        sources = [x for x in g.adjacency[y] if in_d >> x & 1 and not excluded(x, y)]
        if not sources:
            continue
        eligible = True
        for x in g.adjacency[y]:
            wanted = pred(color) if in_d >> x & 1 else succ(color)
            if c[x] != wanted:
                eligible = False
                break
        if not eligible:
            continue
        in_d |= 1 << y
        arcs.extend((x, y) for x in sources)
        for z in g.adjacency[y]:
            if not in_d >> z & 1 and z not in queued:
                heappush(heap, z)
                queued.add(z)

    d_set = VertexSet(in_d)
    return SweepState(pivot_edge=(v, w), d_set=d_set, arcs=tuple(arcs), rotated=d_set)


def rotate(c: Coloring, s: VertexSet) -> Coloring:
    """Decrement the colors of s cyclically: 1 -> 3, 3 -> 2, 2 -> 1"""
    colors = list(c.colors)
    for v in s:
        if colors[v] == UNASSIGNED:
            raise UnassignedVertex(v)
        if colors[v] > 3:
            raise WrongK(c.k, 3)
        colors[v] = pred(colors[v])
    return Coloring(k=3, colors=tuple(colors))


def _check_sweep_colors(g: Graph, c: Coloring, state: SweepState, trace: Sequence[SweepState]) -> None:
    for x, y in state.arcs:
        if c[y] != succ(c[x]):
            raise AlgorithmStalled(f"arc {x}->{y} breaks the +1 color rule", trace)
    for x in state.d_set:
        for y in g.adjacency[x]:
            if y not in state.d_set and c[y] != succ(c[x]):
                raise AlgorithmStalled(f"boundary edge {x}-{y} breaks the +1 color rule", trace)


class RotationSweeper:
    """
    Drives rotation-sweeps on one graph until the bad edges of the coloring
    are gone or all meet a single pivot.
    """

    def __init__(self, g: Graph, c: Coloring, checked: Optional[bool] = None):
        self.g = g
        self.coloring = c
        self.checked = settings.CHECKED_MODE if checked is None else checked
        self.trace: List[SweepState] = []
        self.report: BadEdgeReport = bad_edges(g, c)

    def _sweep(self, e: Edge) -> SweepState:
        state = build_sweep(self.g, self.coloring, e)
        if self.checked:
            _check_sweep_colors(self.g, self.coloring, state, self.trace)
        after = rotate(self.coloring, state.d_set)
        if self.checked:
            if not is_proper(self.g, after):
                raise AlgorithmStalled("coloring became improper after rotation", self.trace + [state])
            lagging = sweep_domination_violations(self.g, after, state.d_set, state.arcs, state.pivot_edge[1])
            if lagging:
                raise AlgorithmStalled(f"vertices {lagging} not fully dominated after sweep", self.trace + [state])
        before = self.report.count
        self.coloring = after
        self.report = bad_edges(self.g, after)
        state = replace(state, bad_before=before, bad_after=self.report.count)
        self.trace.append(state)
        logger.debug(
            f"sweep {len(self.trace)} out of {state.pivot_edge}: |D|={len(state.d_set)}, bad {before}->{self.report.count}"
        )
        return state

    def _bad_pairs(self) -> List[Edge]:
        return self.report.edge_pairs()

    def _pendant_end(self, state: SweepState) -> int:
        """Mask of w when w is a leaf left outside D; rule (i) never admits it"""
        w = state.pivot_edge[1]
        if self.g.degree(w) == 1 and w not in state.d_set:
            return 1 << w
        return 0

    def _repeat_until_clear(self, first: SweepState) -> None:
        """
        Sweep again out of the same root until no bad edge touches the
        original N[D].

        A leaf w stays outside D, so rotating D can flip the orientation of
        e and leave it bad. The next sweep out of e is then rooted at w and
        rotates w alone; together with the sweep before it this rotates
        D + w. Root sweeps must shrink D strictly.
        """
        region = closed_neighborhood_mask(self.g, first.d_set.mask)
        root = first.root
        leaf = first.pivot_edge[1] if self._pendant_end(first) else None
        e = (min(first.pivot_edge), max(first.pivot_edge))
        previous = first.d_set
        leaf_allowed = leaf is not None
        while True:
            near = [(u, v) for u, v in self._bad_pairs() if (region >> u | region >> v) & 1]
            if not near:
                return
            at_root = [pair for pair in near if root in pair]
            if not at_root:
                raise AlgorithmStalled(f"bad edge {near[0]} near the swept region avoids root {root}", self.trace)
            edge = e if e in at_root else at_root[0]
            state = self._sweep(edge)
            if state.root == leaf and leaf_allowed:
                leaf_allowed = False
                continue
            if state.root != root:
                raise AlgorithmStalled(f"repeat sweep re-rooted at {state.root}, expected {root}", self.trace)
            if not state.d_set < previous:
                raise AlgorithmStalled("repeat sweep did not shrink D", self.trace)
            previous = state.d_set
            leaf_allowed = leaf is not None and bool(self._pendant_end(state))

    def run(self) -> SweepOutcome:
        everything = self.g.vertices.mask
        pivot: Optional[int] = None
        while self.report.edges:
            before = self.report.count
            first = self.report.edges[0]
            state = self._sweep((first.u, first.v))
            # a leaf w outside D counts as covered: rotating it too only permutes colors
            if state.d_set.mask | self._pendant_end(state) == everything:
                root = state.root
                stray = [pair for pair in self._bad_pairs() if root not in pair]
                if stray:
                    raise AlgorithmStalled(f"D = V but bad edge {stray[0]} avoids {root}", self.trace)
                pivot = root if self.report.edges else None
                break
            self._repeat_until_clear(state)
            if self.report.count >= before:
                raise AlgorithmStalled(f"bad-edge count stuck at {self.report.count}", self.trace)

        sets = self._output_sets(pivot)
        for s in sets:
            if not is_independent_isolating(self.g, s):
                raise AlgorithmStalled(f"output set {s} is not an independent isolating set", self.trace)
        logger.info(
            f"Rotation-sweeps finished after {len(self.trace)} sweeps, pivot={pivot}, sizes {[len(s) for s in sets]}"
        )
        return SweepOutcome(
            final_coloring=self.coloring,
            pivot=pivot,
            trace=tuple(self.trace),
            sets=sets,
        )

    def _output_sets(self, pivot: Optional[int]) -> Tuple[VertexSet, VertexSet, VertexSet]:
        classes = self.coloring.classes()
        if pivot is not None:
            seen = {self.coloring[u] for u in self.g.adjacency[pivot]}
            seen.add(self.coloring[pivot])
            missing = min(color for color in (1, 2, 3) if color not in seen)
            classes[missing - 1] = classes[missing - 1].add(pivot)
        return classes[0], classes[1], classes[2]


def eliminate_bad_edges(g: Graph, c: Coloring, checked: Optional[bool] = None) -> SweepOutcome:
    _require_connected_order(g)
    if c.k != 3:
        raise WrongK(c.k, 3)
    require_total_proper(g, c)
    return RotationSweeper(g, c, checked).run()


def format_trace(outcome: SweepOutcome) -> str:
    """One line per sweep: root edge, |D| and the bad-edge count before and after"""
    lines = []
    for index, state in enumerate(outcome.trace, start=1):
        v, w = state.pivot_edge
        lines.append(
            f"sweep {index} edge {v}-{w} |D|={len(state.d_set)} bad={state.bad_before}->{state.bad_after}"
        )
    lines.append(f"pivot {outcome.pivot if outcome.pivot is not None else '-'}")
    return "\n".join(lines) + "\n"


def format_stall(error: AlgorithmStalled) -> str:
    lines = [f"# {error.reason}"]
    for index, state in enumerate(error.trace, start=1):
        v, w = state.pivot_edge
        lines.append(f"sweep {index} edge {v}-{w} |D|={len(state.d_set)} D={state.d_set} bad={state.bad_before}->{state.bad_after}")
    return "\n".join(lines) + "\n"


def _as_three_coloring(g: Graph, c: Optional[Coloring]) -> Coloring:
    if c is None:
        found = k_coloring(g, 3)
        if found is None:
            raise Not3Colorable()
        return found
    require_total_proper(g, c)
    used = sorted(set(c.colors))
    if len(used) > 3:
        raise Not3Colorable()
    # labels such as {1, 2, 4} are renumbered 1..3 in ascending order
    relabel = {color: index for index, color in enumerate(used, start=1)}
    return Coloring(k=3, colors=tuple(relabel[color] for color in c.colors))


def tripartite_bound(g: Graph, c: Optional[Coloring] = None, checked: Optional[bool] = None) -> Certificate:
    """Smallest of the three sets left by eliminate_bad_edges; at most (n + 1) / 3"""
    _require_connected_order(g)
    coloring = _as_three_coloring(g, c)
    outcome = eliminate_bad_edges(g, coloring, checked)
    witness = _smallest(outcome.sets)
    bound = bound_for("sweep", g.n)
    if len(witness) > bound:
        raise BoundViolated(f"sweep witness of size {len(witness)} exceeds {bound}", outcome.trace)
    return Certificate(
        method="sweep",
        witness=witness,
        bound=bound,
        verified=is_independent_isolating(g, witness),
        provenance=f"rotation-sweep, {len(outcome.trace)} sweeps, pivot {outcome.pivot}",
        partition=outcome.sets,
        outcome=outcome,
    )


# k-colorable graphs -------------------------------------------------------

def _x_part(g: Graph, low: VertexSet) -> List[VertexSet]:
    """Components of G[A_1 ∪ A_2] with at least three vertices, in parent ids"""
    h_graph, h_ids = induced_subgraph(g, low)
    return [lift(component, h_ids) for component in connected_components(h_graph) if len(component) >= 3]


def _x_candidate(g: Graph, x_components: Sequence[VertexSet]) -> VertexSet:
    """
    S_X completed on g - N[S_X]. Each component of X starts from its smallest
    distance-mod-3 class; a single pass then swaps in whichever class of a
    component gives the smaller completed set. X vertices the chosen class
    does not dominate end up in the completion.
    """
    options: List[List[int]] = []
    choice: List[int] = []
    for component in x_components:
        piece, piece_ids = induced_subgraph(g, component)
        classes = [lift(cls, piece_ids) for cls in bipartite_partition3(piece)]
        options.append([cls.mask for cls in classes])
        choice.append(classes.index(_smallest(classes)))

    def completed(picks: Sequence[int]) -> VertexSet:
        seed = 0
        for masks, pick in zip(options, picks):
            seed |= masks[pick]
        return complete_isolating(g, VertexSet(seed))

    best = completed(choice)
    for index, masks in enumerate(options):
        for pick in range(len(masks)):
            if pick == choice[index]:
                continue
            trial = choice[:index] + [pick] + choice[index + 1:]
            candidate = completed(trial)
            if len(candidate) < len(best):
                best, choice = candidate, trial
    return best


def k_colorable_bound(g: Graph, c: Optional[Coloring] = None) -> Certificate:
    """
    Grundy-coloring bound. With k colors left after grundify, k <= 3 is
    handed to the bipartite or sweep method; otherwise the smallest of
    (i) the smaller of A_1 and A_2, (ii) the best J_m = A_m completed on
    g - N[A_m], and (iii) S_X completed on g - N[S_X] is returned.
    """
    _require_connected_order(g)
    if c is None:
        c = greedy_grundy_coloring(g)
    else:
        require_total_proper(g, c)
    c = grundify(g, c)
    k = c.colors_used
    classes = [c.color_class(color) for color in range(1, k + 1)]
    a = tuple(len(cls) for cls in classes)
    low = classes[0] | (classes[1] if k >= 2 else VertexSet())
    x_components = _x_part(g, low)
    h = len(low)
    x = sum(len(component) for component in x_components)

    if k <= 3:
        delegate = bipartite_bound(g) if k <= 2 else tripartite_bound(g, c.with_k(3))
        stats = KColorableStats(
            n=g.n, k=k, a=a, h=h, x=x, method=delegate.method,
            candidates=(Candidate(delegate.method, delegate.witness),),
        )
        return replace(delegate, stats=stats, provenance=f"grundy k={k} -> {delegate.provenance}")

    first = _smallest(classes[:2])
    j_sets: Dict[int, VertexSet] = {m: complete_isolating(g, classes[m - 1]) for m in range(3, k + 1)}
    best_m = min(j_sets, key=lambda m: (len(j_sets[m]), m))
    third = _x_candidate(g, x_components)
    candidates = (
        Candidate("i", first),
        Candidate("ii", j_sets[best_m], best_m),
        Candidate("iii", third),
    )
    stats = KColorableStats(
        n=g.n, k=k, a=a, h=h, x=x, method="grundy",
        candidates=candidates,
        j_sizes={m: len(s) for m, s in j_sets.items()},
    )
    chosen = min(candidates, key=lambda cand: len(cand.witness))
    bound = bound_for("grundy", g.n, k)
    if len(chosen.witness) > bound:
        raise BoundViolated(f"claim ({chosen.claim}) witness of size {len(chosen.witness)} exceeds {bound}", [stats])
    logger.info(
        f"Grundy bound k={k}: candidate sizes {[len(cand.witness) for cand in candidates]}, bound {bound}"
    )
    return Certificate(
        method="grundy",
        witness=chosen.witness,
        bound=bound,
        verified=is_independent_isolating(g, chosen.witness),
        provenance=f"grundy k={k}, claim ({chosen.claim})" + (f" m={chosen.m}" if chosen.m else ""),
        stats=stats,
    )


def verify_claim_bounds(g: Graph, stats: KColorableStats) -> bool:
    """Check each candidate against the bound of the claim that produced it"""
    n, k, h, x = stats.n, stats.k, stats.h, stats.x
    if n != g.n:
        return False
    if k < 4:
        candidate = stats.candidates[0]
        return len(candidate.witness) <= bound_for(candidate.claim, n)

    claim_i = Fraction(h, 2)
    claim_ii = Fraction(n, 2) + Fraction(n - 2 * h + x, 2 * k - 4)
    claim_iii = Fraction(n, 2) - Fraction(x, 6)

    first = stats.candidate("i")
    third = stats.candidate("iii")
    checks = [
        first is not None and len(first.witness) <= claim_i,
        bool(stats.j_sizes) and Fraction(sum(stats.j_sizes.values()), len(stats.j_sizes)) <= claim_ii,
        third is not None and len(third.witness) <= claim_iii,
        min(claim_i, claim_ii, claim_iii) <= bound_for("grundy", n, k),
    ]
    return all(checks)
