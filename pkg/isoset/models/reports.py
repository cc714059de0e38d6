"""
Report models for isoset
What every command prints, as text or as one JSON object
"""

from fractions import Fraction
from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from isoset.services.graph_core import VertexSet


def fraction_text(value: Fraction) -> str:
    """Exact rational as 'p/q', or 'p' when integral"""
    return str(value)


def vertex_list(s: VertexSet) -> List[int]:
    return s.sorted()


class InstanceSummary(BaseModel):
    """The graph a command ran on"""
    n: int
    m: int
    source: Optional[str] = None
    family: Optional[str] = None
    seed: Optional[int] = None


class CheckOutcome(BaseModel):
    """One invariant check on one instance"""
    name: str
    passed: bool
    skipped: bool = False
    stalled: bool = False
    detail: str = ""
    witness_size: Optional[int] = None
    bound: Optional[str] = None


class RunReport(BaseModel):
    """Result of one command; witnesses are re-verified before they get here"""
    command: str
    instance: Optional[InstanceSummary] = None
    method: Optional[str] = None
    value: Optional[int] = None
    witness: Optional[List[int]] = None
    partition: Optional[List[List[int]]] = None
    bound: Optional[str] = None
    verdict: Optional[bool] = None
    verdicts: Dict[str, bool] = Field(default_factory=dict)
    checks: List[CheckOutcome] = Field(default_factory=list)
    budget_status: str = "n/a"
    nodes_explored: Optional[int] = None
    elapsed_seconds: float = 0.0
    detail: Optional[str] = None

    def to_text(self) -> str:
        lines = [f"command: {self.command}"]
        if self.instance is not None:
            origin = ""
            if self.instance.family is not None:
                origin = f" family={self.instance.family} seed={self.instance.seed}"
            elif self.instance.source is not None:
                origin = f" source={self.instance.source}"
            lines.append(f"instance: n={self.instance.n} m={self.instance.m}{origin}")
        if self.method is not None:
            lines.append(f"method: {self.method}")
        if self.value is not None:
            lines.append(f"value: {self.value}")
        if self.witness is not None:
            lines.append("witness: " + " ".join(str(v) for v in self.witness))
        if self.partition is not None:
            lines.append("partition:")
            lines.extend("  " + (" ".join(str(v) for v in part) or "-") for part in self.partition)
        if self.bound is not None:
            lines.append(f"bound: {self.bound}")
        for claim, ok in self.verdicts.items():
            lines.append(f"{claim}: {'pass' if ok else 'fail'}")
        for check in self.checks:
            state = "skip" if check.skipped else "stall" if check.stalled else "pass" if check.passed else "fail"
            lines.append(f"check {check.name}: {state}" + (f" ({check.detail})" if check.detail else ""))
        if self.verdict is not None:
            lines.append(f"verdict: {'pass' if self.verdict else 'fail'}")
        if self.detail:
            lines.append(self.detail)
        lines.append(f"budget: {self.budget_status}")
        lines.append(f"time: {self.elapsed_seconds:.3f}s")
        return "\n".join(lines) + "\n"


class BenchSummary(BaseModel):
    """Pass/fail/stall counts per check over a bench run"""
    family: str
    count: int
    seed: int
    per_check: Dict[str, Dict[str, int]] = Field(default_factory=dict)
    failures: int = 0
    stalls: int = 0
    mean_ratio: Optional[float] = None

    @property
    def ok(self) -> bool:
        return self.failures == 0 and self.stalls == 0
