"""
Shared fixtures for the isoset test suite
"""

from pathlib import Path
from typing import Callable

import pytest

from config.settings import settings
from isoset.services.graph_core import (
    Graph,
    complete_graph,
    complete_multipartite_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    star_graph,
)
from isoset.services.graph_io import write_graph


@pytest.fixture
def p3() -> Graph:
    return path_graph(3)


@pytest.fixture
def p4() -> Graph:
    return path_graph(4)


@pytest.fixture
def c4() -> Graph:
    return cycle_graph(4)


@pytest.fixture
def c5() -> Graph:
    return cycle_graph(5)


@pytest.fixture
def c6() -> Graph:
    return cycle_graph(6)


@pytest.fixture
def k2() -> Graph:
    return complete_graph(2)


@pytest.fixture
def k3() -> Graph:
    return complete_graph(3)


@pytest.fixture
def k4() -> Graph:
    return complete_graph(4)


@pytest.fixture
def star3() -> Graph:
    return star_graph(3)


@pytest.fixture
def k2222() -> Graph:
    return complete_multipartite_graph([2, 2, 2, 2])


@pytest.fixture
def edgeless3() -> Graph:
    return empty_graph(3)


@pytest.fixture
def graph_file(tmp_path: Path) -> Callable[..., Path]:
    """Write a graph to an edge-list file under tmp_path and return its path"""

    def write(g: Graph, name: str = "graph.txt") -> Path:
        path = tmp_path / name
        write_graph(path, g)
        return path

    return write


@pytest.fixture
def text_file(tmp_path: Path) -> Callable[[str, str], Path]:
    def write(content: str, name: str) -> Path:
        path = tmp_path / name
        path.write_text(content, encoding="utf-8")
        return path

    return write


@pytest.fixture(autouse=True)
def isolated_trace_dir(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    """Stall traces land in the test's tmp directory"""
    trace_dir = tmp_path / "traces"
    monkeypatch.setattr(settings, "TRACE_DIR", trace_dir)
    return trace_dir
