"""
Exception hierarchy for isoset

Every error carries the payload named by the operation that raised it, so the
CLI error handler can render a precise diagnostic and pick an exit code.
"""

from typing import Any, List, Optional, Sequence


class IsosetError(Exception):
    """Base class for all isoset errors"""


# Graph input ---------------------------------------------------------------

class GraphInputError(IsosetError):
    """Malformed graph data; `line_no` is set when the data came from a file"""

    def __init__(self, message: str, line_no: Optional[int] = None):
        self.message = message
        self.line_no = line_no
        super().__init__(self._located())

    def _located(self) -> str:
        return f"line {self.line_no}: {self.message}" if self.line_no is not None else self.message

    def at_line(self, line_no: int) -> "GraphInputError":
        """Return a copy of this error annotated with an input line"""
        annotated = type(self).__new__(type(self))
        annotated.__dict__.update(self.__dict__)
        annotated.line_no = line_no
        annotated.args = (annotated._located(),)
        return annotated


class SelfLoop(GraphInputError):
    def __init__(self, u: int, line_no: Optional[int] = None):
        self.u = u
        super().__init__(f"self-loop at vertex {u}", line_no)


class DuplicateEdge(GraphInputError):
    def __init__(self, u: int, v: int, line_no: Optional[int] = None):
        self.u, self.v = u, v
        super().__init__(f"duplicate edge {u}-{v}", line_no)


class VertexOutOfRange(GraphInputError):
    def __init__(self, u: int, n: Optional[int] = None, line_no: Optional[int] = None):
        self.u, self.n = u, n
        bound = f" (n={n})" if n is not None else ""
        super().__init__(f"vertex {u} out of range{bound}", line_no)


class GraphFormatError(GraphInputError):
    pass


# Structural preconditions -------------------------------------------------

class PreconditionError(IsosetError):
    """An operation was called on an input outside its domain"""


class Disconnected(PreconditionError):
    def __init__(self, unreachable: Optional[int] = None):
        self.unreachable = unreachable
        detail = f" (vertex {unreachable} unreachable)" if unreachable is not None else ""
        super().__init__(f"graph is disconnected{detail}")


class NotBipartite(PreconditionError):
    def __init__(self) -> None:
        super().__init__("graph is not bipartite")


class TooSmall(PreconditionError):
    def __init__(self, n: int, minimum: int = 3):
        self.n, self.minimum = n, minimum
        super().__init__(f"graph has {n} vertices, at least {minimum} required")


class IsolatedVertex(PreconditionError):
    def __init__(self, v: int):
        self.v = v
        super().__init__(f"vertex {v} is isolated")


class ImproperInput(PreconditionError):
    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"coloring rejected: {reason}")


class WrongK(PreconditionError):
    def __init__(self, k: int, expected: int = 3):
        self.k, self.expected = k, expected
        super().__init__(f"coloring has k={k}, expected k={expected}")


class NotBadEdge(PreconditionError):
    def __init__(self, u: int, v: int):
        self.u, self.v = u, v
        super().__init__(f"edge {u}-{v} is not bad")


class UnassignedVertex(PreconditionError):
    def __init__(self, v: int):
        self.v = v
        super().__init__(f"vertex {v} has no color")


class Not3Colorable(PreconditionError):
    def __init__(self) -> None:
        super().__init__("graph is not 3-colorable")


class BadParameter(PreconditionError):
    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"bad parameter: {reason}")


class RetriesExhausted(IsosetError):
    def __init__(self, retries: int, what: str = "connected instance"):
        self.retries = retries
        super().__init__(f"no {what} after {retries} attempts")


# Search budget ------------------------------------------------------------

class BudgetExceeded(IsosetError):
    """The node budget ran out; `best_bound` is an upper bound, not the answer"""

    def __init__(self, nodes: int, best_bound: Optional[int] = None):
        self.nodes = nodes
        self.best_bound = best_bound
        bound = f", best bound so far {best_bound}" if best_bound is not None else ""
        super().__init__(f"node budget exhausted after {nodes} nodes{bound}")


# Algorithm diagnostics ----------------------------------------------------

class AlgorithmStalled(IsosetError):
    """The rotation-sweep loop failed to make progress or broke an invariant"""

    def __init__(self, reason: str, trace: Sequence[Any] = ()):
        self.reason = reason
        self.trace = list(trace)
        super().__init__(f"sweep stalled: {reason} (after {len(self.trace)} sweeps)")


class BoundViolated(IsosetError):
    """A constructive witness exceeded its proven bound (implementation bug)"""

    def __init__(self, reason: str, trace: Sequence[Any] = ()):
        self.reason = reason
        self.trace = list(trace)
        super().__init__(f"bound violated: {reason}")


class VerificationFailed(IsosetError):
    def __init__(self, claims: List[str]):
        self.claims = claims
        super().__init__(f"verification failed: {', '.join(claims)}")
