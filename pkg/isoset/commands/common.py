"""
Shared helpers for isoset commands
"""

import argparse
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, TextIO

from isoset.models.reports import InstanceSummary, RunReport
from isoset.services.graph_core import Graph
from isoset.services.graph_io import read_graph


@dataclass
class Output:
    """Where reports go: text blocks or one JSON object per report, on stdout"""

    json: bool = False
    stream: TextIO = field(default_factory=lambda: sys.stdout)

    def report(self, report: RunReport) -> None:
        if self.json:
            self.stream.write(report.model_dump_json() + "\n")
        else:
            self.stream.write(report.to_text())
        self.stream.flush()

    def text(self, text: str) -> None:
        if not self.json:
            self.stream.write(text)
            self.stream.flush()


class Stopwatch:
    def __init__(self) -> None:
        self.start = time.perf_counter()

    @property
    def elapsed(self) -> float:
        return round(time.perf_counter() - self.start, 6)


def load_graph(path: str) -> Graph:
    return read_graph(Path(path))


def summarize(g: Graph, source: Optional[str] = None, family: Optional[str] = None,
              seed: Optional[int] = None) -> InstanceSummary:
    return InstanceSummary(n=g.n, m=g.m, source=source, family=family, seed=seed)


def int_list(text: str) -> List[int]:
    """argparse type: '2,2,3' -> [2, 2, 3]"""
    try:
        return [int(token) for token in text.replace(" ", "").split(",") if token]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
