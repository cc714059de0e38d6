"""
Text formats for isoset

Edge lists: a `p <n> <m>` header line, then m lines `<u> <v>` with 0-based
ids. Set files hold one id per line; partition files hold one set per line
(`-` for an empty set). Lines starting with `#` and blank lines are skipped
everywhere. Errors name the 1-based line they come from.
"""

from pathlib import Path
from typing import Iterable, Iterator, List, Optional, Tuple, Union

from isoset.exceptions import GraphFormatError, GraphInputError, VertexOutOfRange
from isoset.services.gadgets import GadgetMap
from isoset.services.graph_core import Graph, VertexSet
from isoset.utils.logger import get_logger

logger = get_logger(__name__)

PathLike = Union[str, Path]


def _content_lines(text: str) -> Iterator[Tuple[int, List[str]]]:
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield line_no, line.split()


def _parse_int(token: str, line_no: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"expected an integer, got {token!r}", line_no)


def parse_edge_list(text: str) -> Graph:
    header: Optional[Tuple[int, int]] = None
    header_line = 0
    edges: List[Tuple[int, int]] = []
    edge_lines: List[int] = []
    for line_no, tokens in _content_lines(text):
        if header is None:
            if len(tokens) != 3 or tokens[0] != "p":
                raise GraphFormatError("expected header 'p <n> <m>'", line_no)
            n, m = _parse_int(tokens[1], line_no), _parse_int(tokens[2], line_no)
            if n < 0 or m < 0:
                raise GraphFormatError("negative count in header", line_no)
            header, header_line = (n, m), line_no
            continue
        if len(tokens) != 2:
            raise GraphFormatError(f"expected '<u> <v>', got {len(tokens)} fields", line_no)
        edges.append((_parse_int(tokens[0], line_no), _parse_int(tokens[1], line_no)))
        edge_lines.append(line_no)

    if header is None:
        raise GraphFormatError("missing header 'p <n> <m>'")
    n, m = header
    if len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(edges)}", header_line)

    try:
        return Graph.from_edge_list(n, edges)
    except GraphInputError as e:
        raise e.at_line(_offending_line(n, edges, edge_lines)) from e


def _offending_line(n: int, edges: List[Tuple[int, int]], edge_lines: List[int]) -> int:
    """First edge line that Graph.from_edge_list would reject"""
    seen = set()
    for (u, v), line_no in zip(edges, edge_lines):
        key = (min(u, v), max(u, v))
        if not (0 <= u < n and 0 <= v < n) or u == v or key in seen:
            return line_no
        seen.add(key)
    return edge_lines[-1]


def format_edge_list(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"# {comment}" for comment in comments]
    lines.append(f"p {g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_graph(path: PathLike) -> Graph:
    graph = parse_edge_list(Path(path).read_text(encoding="utf-8"))
    logger.debug(f"Read {path}: n={graph.n}, m={graph.m}")
    return graph


def write_graph(path: PathLike, g: Graph, comments: Iterable[str] = ()) -> None:
    Path(path).write_text(format_edge_list(g, comments), encoding="utf-8", newline="\n")


def _check_ids(ids: List[int], n: Optional[int], line_no: int) -> None:
    for v in ids:
        if v < 0 or (n is not None and v >= n):
            raise VertexOutOfRange(v, n, line_no)


def parse_vertex_set(text: str, n: Optional[int] = None) -> VertexSet:
    ids: List[int] = []
    for line_no, tokens in _content_lines(text):
        if len(tokens) != 1:
            raise GraphFormatError("expected one vertex id per line", line_no)
        v = _parse_int(tokens[0], line_no)
        _check_ids([v], n, line_no)
        if v in ids:
            raise GraphFormatError(f"vertex {v} listed twice", line_no)
        ids.append(v)
    return VertexSet.of(ids)


def parse_partition(text: str, n: Optional[int] = None) -> List[VertexSet]:
    sets: List[VertexSet] = []
    for line_no, tokens in _content_lines(text):
        if tokens == ["-"]:
            sets.append(VertexSet())
            continue
        ids = [_parse_int(token, line_no) for token in tokens]
        _check_ids(ids, n, line_no)
        if len(set(ids)) != len(ids):
            raise GraphFormatError("vertex listed twice in one set", line_no)
        sets.append(VertexSet.of(ids))
    return sets


def format_vertex_set(s: VertexSet) -> str:
    return " ".join(str(v) for v in s)


def format_partition(sets: Iterable[VertexSet]) -> str:
    return "".join((format_vertex_set(s) if s else "-") + "\n" for s in sets)


def format_gadget_map(gadget_map: GadgetMap) -> str:
    lines = [f"v {old} {new}" for old, new in sorted(gadget_map.base_vertices.items())]
    lines.extend(f"e {u} {v} {a} {b}" for (u, v), (a, b) in sorted(gadget_map.pe_pairs.items()))
    lines.extend(f"q {w} {x} {y} {z}" for w, (x, y, z) in sorted(gadget_map.qw_trios.items()))
    return "\n".join(lines) + "\n"
