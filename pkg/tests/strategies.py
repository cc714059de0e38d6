"""
Hypothesis strategies producing isoset graphs
"""

from itertools import combinations

import networkx as nx
from hypothesis import strategies as st

from isoset.services.generators import gen_random, make_spec
from isoset.services.graph_core import Graph

seeds = st.integers(min_value=0, max_value=2**64 - 1)


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 9) -> Graph:
    """Arbitrary simple graphs, not necessarily connected"""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    slots = list(combinations(range(n), 2))
    present = draw(st.lists(st.booleans(), min_size=len(slots), max_size=len(slots)))
    return Graph.from_edge_list(n, [edge for edge, keep in zip(slots, present) if keep])


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 9) -> Graph:
    """A random tree on the vertices plus arbitrary extra edges"""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    edges = set()
    for v in range(1, n):
        parent = draw(st.integers(min_value=0, max_value=v - 1))
        edges.add((parent, v))
    for u, v in combinations(range(n), 2):
        if (u, v) not in edges and draw(st.booleans()):
            edges.add((u, v))
    return Graph.from_edge_list(n, sorted(edges))


@st.composite
def random_family(draw, family: str, min_n: int, max_n: int, **params) -> Graph:
    """An instance of one of the seeded random families"""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    seed = draw(seeds)
    return gen_random(make_spec(family, n=n, **params), seed)


def to_networkx(g: Graph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(g.n))
    graph.add_edges_from(g.edges())
    return graph
