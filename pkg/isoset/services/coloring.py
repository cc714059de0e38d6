"""
Coloring service for isoset
Greedy/Grundy colorings and exact DSATUR backtracking
"""

from typing import List, Optional

from config.settings import settings
from isoset.exceptions import BudgetExceeded, ImproperInput
from isoset.services.graph_core import UNASSIGNED, Coloring, Graph
from isoset.utils.logger import get_logger

logger = get_logger(__name__)


def is_proper(g: Graph, c: Coloring) -> bool:
    """No edge joins two equal assigned colors"""
    colors = c.colors
    for u, v in g.edges():
        if colors[u] != UNASSIGNED and colors[u] == colors[v]:
            return False
    return True


def is_grundy(g: Graph, c: Coloring) -> bool:
    """Total, proper, and every vertex colored m sees all colors below m"""
    if not c.is_total or not is_proper(g, c):
        return False
    for v in range(g.n):
        present = {c[w] for w in g.adjacency[v]}
        if any(j not in present for j in range(1, c[v])):
            return False
    return True


def require_total_proper(g: Graph, c: Coloring) -> None:
    if len(c) != g.n:
        raise ImproperInput(f"coloring covers {len(c)} vertices, graph has {g.n}")
    if not c.is_total:
        raise ImproperInput("coloring is partial")
    if not is_proper(g, c):
        raise ImproperInput("coloring is not proper")


def greedy_grundy_coloring(g: Graph) -> Coloring:
    """First-fit in ascending id order; the result always has the Grundy property"""
    colors = [UNASSIGNED] * g.n
    for v in range(g.n):
        taken = {colors[w] for w in g.adjacency[v]}
        color = 1
        while color in taken:
            color += 1
        colors[v] = color
    return Coloring.of(colors)


def grundify(g: Graph, c: Coloring) -> Coloring:
    """
    Move vertices down until the coloring is Grundy.

    A vertex colored m that has no neighbor in some class j < m moves to the
    smallest such j. Passes run in ascending id until one makes no move; the
    sum of colors drops with every move, so this terminates.
    """
    require_total_proper(g, c)
    colors = list(c.colors)
    moves = 0
    changed = True
    while changed:
        changed = False
        for v in range(g.n):
            present = {colors[w] for w in g.adjacency[v]}
            for j in range(1, colors[v]):
                if j not in present:
                    colors[v] = j
                    moves += 1
                    changed = True
                    break
    logger.debug(f"grundify made {moves} moves")
    return Coloring(k=c.k, colors=tuple(colors))


class DsaturSearch:
    """
    Backtracking k-coloring decision procedure.

    Branches on the uncolored vertex of highest saturation (ties: higher
    degree, then lower id) and never opens more than one fresh color per
    level, which removes color-permutation symmetry.
    """

    def __init__(self, g: Graph, k: int, budget: int):
        self.g = g
        self.k = k
        self.budget = budget
        self.nodes = 0
        self.colors = [UNASSIGNED] * g.n
        self.neighbor_counts = [[0] * (k + 1) for _ in range(g.n)]
        self.saturation = [0] * g.n

    def _assign(self, v: int, color: int) -> None:
        self.colors[v] = color
        for w in self.g.adjacency[v]:
            counts = self.neighbor_counts[w]
            if counts[color] == 0:
                self.saturation[w] += 1
            counts[color] += 1

    def _unassign(self, v: int) -> None:
        color = self.colors[v]
        self.colors[v] = UNASSIGNED
        for w in self.g.adjacency[v]:
            counts = self.neighbor_counts[w]
            counts[color] -= 1
            if counts[color] == 0:
                self.saturation[w] -= 1

    def _pick(self) -> int:
        best, best_key = -1, (-1, -1)
        for v in range(self.g.n):
            if self.colors[v] != UNASSIGNED:
                continue
            key = (self.saturation[v], len(self.g.adjacency[v]))
            if key > best_key:
                best, best_key = v, key
        return best

    def _search(self, colored: int, used: int) -> bool:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(self.nodes)
        if colored == self.g.n:
            return True
        v = self._pick()
        if self.saturation[v] >= self.k:
            return False
        counts = self.neighbor_counts[v]
        for color in range(1, min(self.k, used + 1) + 1):
            if counts[color]:
                continue
            self._assign(v, color)
            if self._search(colored + 1, max(used, color)):
                return True
            self._unassign(v)
        return False

    def run(self) -> Optional[Coloring]:
        if self.g.n == 0:
            return Coloring(k=self.k, colors=())
        if self._search(0, 0):
            return Coloring(k=self.k, colors=tuple(self.colors))
        return None


def k_coloring(g: Graph, k: int, budget: Optional[int] = None) -> Optional[Coloring]:
    """A proper k-coloring, or None when none exists"""
    if budget is None:
        budget = settings.CHROMATIC_NODE_BUDGET
    search = DsaturSearch(g, k, budget)
    result = search.run()
    logger.debug(f"{k}-coloring search on n={g.n}: {'found' if result else 'none'} in {search.nodes} nodes")
    return result


def greedy_clique(g: Graph) -> List[int]:
    """Largest clique found by growing one greedily from every start vertex"""
    best: List[int] = []
    for start in range(g.n):
        clique = [start]
        candidates = g.masks[start]
        while candidates:
            low = candidates & -candidates
            v = low.bit_length() - 1
            clique.append(v)
            candidates &= g.masks[v]
        if len(clique) > len(best):
            best = clique
    return sorted(best)


def chromatic_number(g: Graph, budget: Optional[int] = None) -> int:
    """
    Exact chromatic number: clique lower bound, greedy upper bound, and a
    DSATUR decision search for every value in between.
    """
    if g.n == 0:
        return 0
    if budget is None:
        budget = settings.CHROMATIC_NODE_BUDGET
    lower = len(greedy_clique(g))
    upper = greedy_grundy_coloring(g).colors_used
    spent = 0
    for k in range(lower, upper):
        search = DsaturSearch(g, k, budget - spent)
        try:
            found = search.run()
        except BudgetExceeded:
            raise BudgetExceeded(spent + search.nodes, best_bound=upper)
        spent += search.nodes
        if found is not None:
            return k
    return upper
