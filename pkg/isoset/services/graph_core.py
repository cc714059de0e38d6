"""
Graph core for isoset
Immutable simple graphs, vertex sets and colorings, plus traversal primitives
"""

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from isoset.exceptions import (
    Disconnected,
    DuplicateEdge,
    ImproperInput,
    SelfLoop,
    VertexOutOfRange,
)
from isoset.utils.logger import get_logger

logger = get_logger(__name__)

Edge = Tuple[int, int]

UNASSIGNED = 0


@dataclass(frozen=True)
class VertexSet:
    """
    Subset of 0..n-1 stored as an integer bitmask.

    Iteration, `sorted()` and `repr` are always in ascending id order, so two
    equal sets print and compare identically.
    """

    mask: int = 0

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in vertices:
            if v < 0:
                raise VertexOutOfRange(v)
            mask |= 1 << v
        return cls(mask)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls((1 << n) - 1)

    def __iter__(self) -> Iterator[int]:
        mask = self.mask
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 0 and bool(self.mask >> v & 1)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask | other.mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask & other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask & ~other.mask)

    def __le__(self, other: "VertexSet") -> bool:
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "VertexSet") -> bool:
        return self <= other and self.mask != other.mask

    def complement(self, n: int) -> "VertexSet":
        return VertexSet(((1 << n) - 1) & ~self.mask)

    def add(self, v: int) -> "VertexSet":
        return VertexSet(self.mask | 1 << v)

    def min(self) -> int:
        if not self.mask:
            raise ValueError("empty vertex set has no minimum")
        return (self.mask & -self.mask).bit_length() - 1

    def sorted(self) -> List[int]:
        return list(self)

    def sort_key(self) -> Tuple[int, ...]:
        """Key for lexicographic comparison of the ascending id lists"""
        return tuple(self)

    def __repr__(self) -> str:
        return "{" + ",".join(str(v) for v in self) + "}"


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph on vertices 0..n-1.

    `adjacency[v]` is the ascending tuple of neighbors of v; `masks[v]` is the
    same neighborhood as a bitmask.
    """

    n: int
    adjacency: Tuple[Tuple[int, ...], ...]
    masks: Tuple[int, ...] = field(repr=False, compare=False, default=())

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Build a graph; duplicates and self-loops are errors, never merged"""
        if n < 0:
            raise VertexOutOfRange(n)
        neighbor_sets: List[set] = [set() for _ in range(n)]
        for edge in edges:
            u, v = int(edge[0]), int(edge[1])
            for w in (u, v):
                if w < 0 or w >= n:
                    raise VertexOutOfRange(w, n)
            if u == v:
                raise SelfLoop(u)
            if v in neighbor_sets[u]:
                raise DuplicateEdge(min(u, v), max(u, v))
            neighbor_sets[u].add(v)
            neighbor_sets[v].add(u)
        adjacency = tuple(tuple(sorted(s)) for s in neighbor_sets)
        masks = tuple(sum(1 << w for w in s) for s in neighbor_sets)
        return cls(n=n, adjacency=adjacency, masks=masks)

    @property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    @property
    def vertices(self) -> VertexSet:
        return VertexSet.full(self.n)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> List[int]:
        return [len(nbrs) for nbrs in self.adjacency]

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def neighbor_set(self, v: int) -> VertexSet:
        return VertexSet(self.masks[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def edges(self) -> List[Edge]:
        """Edges as (min, max) pairs in ascending order"""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def to_edge_list(self) -> List[Edge]:
        return self.edges()

    def check_vertex(self, v: int) -> None:
        if v < 0 or v >= self.n:
            raise VertexOutOfRange(v, self.n)

    def check_subset(self, s: VertexSet) -> None:
        if s.mask >> self.n:
            raise VertexOutOfRange(s.mask.bit_length() - 1, self.n)


@dataclass(frozen=True)
class Coloring:
    """
    Total or partial assignment of colors 1..k; 0 marks an uncolored vertex.

    k is carried explicitly so that unused colors stay representable.
    """

    k: int
    colors: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ImproperInput(f"k must be at least 1, got {self.k}")
        for v, col in enumerate(self.colors):
            if col < UNASSIGNED or col > self.k:
                raise ImproperInput(f"vertex {v} has color {col} outside 1..{self.k}")

    @classmethod
    def of(cls, colors: Sequence[int], k: Optional[int] = None) -> "Coloring":
        colors = tuple(int(col) for col in colors)
        if k is None:
            k = max(colors, default=1) or 1
        return cls(k=k, colors=colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __len__(self) -> int:
        return len(self.colors)

    @property
    def is_total(self) -> bool:
        return UNASSIGNED not in self.colors

    @property
    def colors_used(self) -> int:
        return len({col for col in self.colors if col != UNASSIGNED})

    def color_class(self, color: int) -> VertexSet:
        return VertexSet.of(v for v, col in enumerate(self.colors) if col == color)

    def classes(self) -> List[VertexSet]:
        """Color classes for colors 1..k in order (possibly empty)"""
        masks = [0] * (self.k + 1)
        for v, col in enumerate(self.colors):
            masks[col] |= 1 << v
        return [VertexSet(mask) for mask in masks[1:]]

    def with_k(self, k: int) -> "Coloring":
        return Coloring(k=k, colors=self.colors)


@dataclass(frozen=True)
class BfsLayers:
    root: int
    dist: Tuple[int, ...]


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    return Graph.from_edge_list(n, edges)


def connected_components(g: Graph) -> List[VertexSet]:
    seen = 0
    components: List[VertexSet] = []
    for start in range(g.n):
        if seen >> start & 1:
            continue
        component = 1 << start
        frontier = 1 << start
        while frontier:
            grown = 0
            for v in VertexSet(frontier):
                grown |= g.masks[v]
            frontier = grown & ~component
            component |= frontier
        seen |= component
        components.append(VertexSet(component))
    return components


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def bipartition(g: Graph) -> Optional[Tuple[VertexSet, VertexSet]]:
    """
    Proper 2-coloring sides, or None for a non-bipartite graph.

    In every component the least vertex lands on side A.
    """
    side = [-1] * g.n
    for start in range(g.n):
        if side[start] != -1:
            continue
        side[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if side[w] == -1:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return None
    a = VertexSet.of(v for v in range(g.n) if side[v] == 0)
    return a, a.complement(g.n)


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def bfs_layers(g: Graph, root: int) -> BfsLayers:
    g.check_vertex(root)
    dist = [-1] * g.n
    dist[root] = 0
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in g.adjacency[v]:
            if dist[w] == -1:
                dist[w] = dist[v] + 1
                queue.append(w)
    for v, d in enumerate(dist):
        if d == -1:
            raise Disconnected(v)
    return BfsLayers(root=root, dist=tuple(dist))


def end_vertices(g: Graph) -> VertexSet:
    return VertexSet.of(v for v in range(g.n) if len(g.adjacency[v]) == 1)


def closed_neighborhood_mask(g: Graph, mask: int) -> int:
    closed = mask
    for v in VertexSet(mask):
        closed |= g.masks[v]
    return closed


def is_independent(g: Graph, s: VertexSet) -> bool:
    return all(g.masks[v] & s.mask == 0 for v in s)


def is_dominating(g: Graph, s: VertexSet) -> bool:
    return closed_neighborhood_mask(g, s.mask) == (1 << g.n) - 1


def greedy_independent_set(g: Graph, allowed: Optional[VertexSet] = None) -> VertexSet:
    """
    Maximal independent set of the subgraph induced by `allowed`, built by
    scanning vertices in ascending id.
    """
    available = allowed.mask if allowed is not None else (1 << g.n) - 1
    chosen = 0
    while available:
        low = available & -available
        v = low.bit_length() - 1
        chosen |= low
        available &= ~(low | g.masks[v])
    return VertexSet(chosen)


def independent_dominating_set(g: Graph) -> VertexSet:
    return greedy_independent_set(g)


def induced_subgraph(g: Graph, s: VertexSet) -> Tuple[Graph, List[int]]:
    """Subgraph induced by s, relabelled 0.. in ascending old id; returns (graph, new->old)"""
    g.check_subset(s)
    old_ids = s.sorted()
    new_id: Dict[int, int] = {old: new for new, old in enumerate(old_ids)}
    edges = [
        (new_id[u], new_id[v])
        for u in old_ids
        for v in g.adjacency[u]
        if u < v and v in new_id
    ]
    return Graph.from_edge_list(len(old_ids), edges), old_ids


def remove_vertices(g: Graph, s: VertexSet) -> Tuple[Graph, List[int]]:
    return induced_subgraph(g, s.complement(g.n))


def lift(s: VertexSet, old_ids: Sequence[int]) -> VertexSet:
    """Map a vertex set of an induced subgraph back to the parent's ids"""
    return VertexSet.of(old_ids[v] for v in s)


# Named families -----------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph.from_edge_list(n, [])


def path_graph(n: int) -> Graph:
    return Graph.from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise VertexOutOfRange(n)
    return Graph.from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the center at vertex 0"""
    return Graph.from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_multipartite_graph(sizes: Sequence[int]) -> Graph:
    """Parts are contiguous id blocks in the given order"""
    part: List[int] = []
    for index, size in enumerate(sizes):
        part.extend([index] * size)
    n = len(part)
    return Graph.from_edge_list(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if part[u] != part[v]]
    )
