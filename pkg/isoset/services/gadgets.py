"""
Gadget and extremal-family constructions for isoset

Vertex ids are laid out deterministically: original vertices keep their ids
and added vertices follow in a fixed canonical order, so maps and golden
files stay stable between runs.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Tuple

from isoset.exceptions import BadParameter
from isoset.services.graph_core import Graph, is_connected
from isoset.utils.logger import get_logger

logger = get_logger(__name__)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class GadgetMap:
    """Where build_J put each piece of the original graph"""

    base_vertices: Dict[int, int]
    pe_pairs: Dict[Edge, Tuple[int, int]] = field(default_factory=dict)
    qw_trios: Dict[int, Tuple[int, int, int]] = field(default_factory=dict)

    @property
    def order(self) -> int:
        return len(self.base_vertices) + 2 * len(self.pe_pairs) + 3 * len(self.qw_trios)


@dataclass(frozen=True)
class KnownValues:
    iota_independent: Optional[int] = None
    iota: Optional[int] = None
    source: str = ""


def build_J(g: Graph) -> Tuple[Graph, GadgetMap]:
    """
    For the i-th edge uv (canonical order) add the adjacent pair
    p_u = n + 2i ~ u and p_v = n + 2i + 1 ~ v; for every vertex w add three
    leaves n + 2m + 3w + {0, 1, 2} hanging off w.
    """
    n = g.n
    original = g.edges()
    m = len(original)
    edges: List[Edge] = list(original)
    pe_pairs: Dict[Edge, Tuple[int, int]] = {}
    for i, (u, v) in enumerate(original):
        p_u, p_v = n + 2 * i, n + 2 * i + 1
        edges.extend([(u, p_u), (p_u, p_v), (v, p_v)])
        pe_pairs[(u, v)] = (p_u, p_v)
    qw_trios: Dict[int, Tuple[int, int, int]] = {}
    for w in range(n):
        first = n + 2 * m + 3 * w
        trio = (first, first + 1, first + 2)
        edges.extend((w, leaf) for leaf in trio)
        qw_trios[w] = trio
    gadget = Graph.from_edge_list(4 * n + 2 * m, edges)
    logger.debug(f"J(G): n={n}, m={m} -> n={gadget.n}, m={gadget.m}")
    return gadget, GadgetMap(base_vertices={v: v for v in range(n)}, pe_pairs=pe_pairs, qw_trios=qw_trios)


def operation_O_with_ids(g: Graph, x: int) -> Tuple[Graph, Tuple[int, int, int]]:
    """
    Add x' = n with N(x') = N(x), then the path x - y - y' - x' with
    y = n + 1 and y' = n + 2. Returns the graph and (x', y, y').
    """
    g.check_vertex(x)
    n = g.n
    clone, y, y_prime = n, n + 1, n + 2
    edges = g.edges()
    edges.extend((w, clone) for w in g.adjacency[x])
    edges.extend([(x, y), (y, y_prime), (y_prime, clone)])
    return Graph.from_edge_list(n + 3, edges), (clone, y, y_prime)


def operation_O(g: Graph, x: int) -> Graph:
    return operation_O_with_ids(g, x)[0]


def gen_M(r: int) -> Tuple[Graph, KnownValues]:
    """
    K_r on 0..r-1 with r feet per clique vertex, each foot edge subdivided.
    Foot j of clique vertex i is the path i - s - s + 1 with s = r + 2(ir + j).
    """
    if r < 2:
        raise BadParameter(f"r must be at least 2, got {r}")
    edges: List[Edge] = list(combinations(range(r), 2))
    for i in range(r):
        for j in range(r):
            s = r + 2 * (i * r + j)
            edges.extend([(i, s), (s, s + 1)])
    graph = Graph.from_edge_list(2 * r * r + r, edges)
    return graph, KnownValues(iota_independent=r * (r - 1) + 1, source="formula r(r-1)+1")


def gen_p2_corona(g: Graph) -> Tuple[Graph, KnownValues]:
    """Vertex v gains the pendant path v - a_v - b_v with a_v = n + 2v, b_v = n + 2v + 1"""
    n = g.n
    edges = g.edges()
    for v in range(n):
        a, b = n + 2 * v, n + 2 * v + 1
        edges.extend([(v, a), (a, b)])
    corona = Graph.from_edge_list(3 * n, edges)
    if n >= 1 and is_connected(g):
        return corona, KnownValues(iota=n, source="one third of the order (connected base)")
    return corona, KnownValues(source="base graph disconnected; no value claimed")


def gen_jewel(m: int) -> Tuple[Graph, KnownValues]:
    """
    Start from K_2 on b_0 = 0, c_0 = 1 and apply Operation O to b_0, b_1, ...,
    b_{m-2}. The clone of b_{i-1} is a_i and the path interior is b_i, c_i,
    so b_i always has id n + 1 of the graph it was added to.
    """
    if m < 1:
        raise BadParameter(f"m must be at least 1, got {m}")
    graph = Graph.from_edge_list(2, [(0, 1)])
    b = 0
    for _ in range(m - 1):
        graph, (_, b, _) = operation_O_with_ids(graph, b)
    return graph, KnownValues(iota_independent=m, source="jewel J_m has value m")


def connected_graphs(max_n: int) -> Iterator[Graph]:
    """Every labelled connected graph on 1..max_n vertices, by brute force over edge subsets"""
    if max_n < 1:
        raise BadParameter(f"max_n must be at least 1, got {max_n}")
    for n in range(1, max_n + 1):
        slots = list(combinations(range(n), 2))
        for subset in range(1 << len(slots)):
            edges = [slots[i] for i in range(len(slots)) if subset >> i & 1]
            if len(edges) < n - 1:
                continue
            graph = Graph.from_edge_list(n, edges)
            if is_connected(graph):
                yield graph
