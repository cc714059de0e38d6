"""
Seeded random graph generators for isoset

Every instance is a pure function of (family, parameters, seed): the stream
is numpy's PCG64 seeded with the 64-bit seed, and only `integers`, `random`
and `permutation` are drawn from it, always in the same order.
"""

from typing import List, Literal, Optional, Tuple

from numpy.random import PCG64, Generator
from pydantic import BaseModel, Field, ValidationError, model_validator

from config.settings import settings
from isoset.exceptions import BadParameter, RetriesExhausted
from isoset.services.graph_core import Coloring, Graph, is_connected
from isoset.utils.logger import get_logger

logger = get_logger(__name__)

Family = Literal["tree", "bipartite", "kpartite", "gnp", "triangulated_polygon"]
FAMILIES: Tuple[str, ...] = ("tree", "bipartite", "kpartite", "gnp", "triangulated_polygon")

Edge = Tuple[int, int]


class RandomGraphSpec(BaseModel):
    """Parameters of one random family; `sizes` fixes the parts of bipartite/kpartite graphs"""

    family: Family
    n: Optional[int] = Field(default=None, ge=1)
    k: Optional[int] = Field(default=None, ge=1)
    sizes: Optional[List[int]] = None
    p: float = Field(default=0.5, ge=0.0, le=1.0)
    connected: bool = True

    @model_validator(mode="after")
    def check_family_parameters(self) -> "RandomGraphSpec":
        if self.sizes is not None:
            if any(size < 1 for size in self.sizes):
                raise ValueError("part sizes must be positive")
            if self.n is not None and self.n != sum(self.sizes):
                raise ValueError(f"n={self.n} does not match sizes summing to {sum(self.sizes)}")
            if self.k is not None and self.k != len(self.sizes):
                raise ValueError(f"k={self.k} does not match {len(self.sizes)} sizes")
        elif self.n is None:
            raise ValueError("n or sizes is required")

        if self.family == "bipartite":
            if self.sizes is not None and len(self.sizes) != 2:
                raise ValueError("bipartite graphs take exactly two sizes")
            if self.sizes is None and self.n is not None and self.n < 2:
                raise ValueError("bipartite graphs need n >= 2")
        elif self.family == "kpartite":
            if self.sizes is None:
                if self.k is None:
                    raise ValueError("kpartite graphs need k or sizes")
                if self.n is not None and self.n < self.k:
                    raise ValueError(f"n={self.n} is smaller than k={self.k}")
        elif self.sizes is not None:
            raise ValueError(f"{self.family} graphs do not take sizes")
        elif self.family == "triangulated_polygon" and self.order < 3:
            raise ValueError("a polygon needs n >= 3")
        return self

    @property
    def order(self) -> int:
        return sum(self.sizes) if self.sizes is not None else int(self.n or 0)

    def part_sizes(self) -> List[int]:
        """Part sizes of a kpartite spec; balanced when only (n, k) was given"""
        if self.sizes is not None:
            return list(self.sizes)
        k = int(self.k or 1)
        base, extra = divmod(self.order, k)
        return [base + 1 if index < extra else base for index in range(k)]

    def planted_coloring(self) -> Coloring:
        """The coloring a kpartite instance is built on: parts are contiguous id blocks"""
        if self.family != "kpartite":
            raise BadParameter(f"{self.family} graphs have no planted coloring")
        sizes = self.part_sizes()
        colors: List[int] = []
        for color, size in enumerate(sizes, start=1):
            colors.extend([color] * size)
        return Coloring(k=len(sizes), colors=tuple(colors))


def make_spec(family: str, **params: object) -> RandomGraphSpec:
    try:
        return RandomGraphSpec(family=family, **params)
    except ValidationError as e:
        reasons = "; ".join(error["msg"] for error in e.errors())
        raise BadParameter(reasons) from e


def _relabel(edges: List[Edge], order: List[int]) -> List[Edge]:
    return [(order[u], order[v]) for u, v in edges]


def _tree(rng: Generator, n: int) -> List[Edge]:
    edges = [(int(rng.integers(0, v)), v) for v in range(1, n)]
    return _relabel(edges, [int(x) for x in rng.permutation(n)])


def _parts_edges(rng: Generator, sizes: List[int], p: float) -> List[Edge]:
    part: List[int] = []
    for index, size in enumerate(sizes):
        part.extend([index] * size)
    n = len(part)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if part[u] != part[v] and rng.random() < p:
                edges.append((u, v))
    return edges


def _gnp(rng: Generator, n: int, p: float) -> List[Edge]:
    return [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]


def _triangulated_polygon(rng: Generator, n: int) -> List[Edge]:
    """Cycle 0..n-1 plus n-3 diagonals from recursive random apex splits"""
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    pending = [(0, n - 1)]
    while pending:
        i, j = pending.pop()
        if j - i < 2:
            continue
        apex = int(rng.integers(i + 1, j))
        if apex - i > 1:
            edges.append((i, apex))
        if j - apex > 1:
            edges.append((apex, j))
        pending.extend([(i, apex), (apex, j)])
    return _relabel(edges, [int(x) for x in rng.permutation(n)])


def _draw(spec: RandomGraphSpec, rng: Generator) -> Graph:
    n = spec.order
    if spec.family == "tree":
        edges = _tree(rng, n)
    elif spec.family == "bipartite":
        if spec.sizes is not None:
            sizes = list(spec.sizes)
        else:
            left = int(rng.integers(1, n))
            sizes = [left, n - left]
        edges = _parts_edges(rng, sizes, spec.p)
    elif spec.family == "kpartite":
        edges = _parts_edges(rng, spec.part_sizes(), spec.p)
    elif spec.family == "gnp":
        edges = _gnp(rng, n, spec.p)
    else:
        edges = _triangulated_polygon(rng, n)
    return Graph.from_edge_list(n, edges)


def gen_random(spec: RandomGraphSpec, seed: int, max_retries: Optional[int] = None) -> Graph:
    """
    Draw a graph of the given family. When spec.connected is set, draws are
    repeated from the same stream until one is connected.
    """
    if seed < 0 or seed >= 1 << 64:
        raise BadParameter(f"seed must be a 64-bit unsigned integer, got {seed}")
    if max_retries is None:
        max_retries = settings.GENERATOR_MAX_RETRIES
    rng = Generator(PCG64(seed))
    for attempt in range(1, max_retries + 1):
        graph = _draw(spec, rng)
        if not spec.connected or is_connected(graph):
            logger.debug(f"{spec.family} n={graph.n} m={graph.m} seed={seed} after {attempt} draws")
            return graph
    logger.warning(f"{spec.family} seed={seed}: no connected draw in {max_retries} attempts")
    raise RetriesExhausted(max_retries, f"connected {spec.family} graph")
