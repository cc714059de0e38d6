"""
Error categories and exit codes for the isoset command line
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple, Type
import logging

from isoset.exceptions import (
    AlgorithmStalled,
    BoundViolated,
    BudgetExceeded,
    GraphInputError,
    IsosetError,
    Not3Colorable,
    NotBipartite,
    PreconditionError,
    RetriesExhausted,
    VerificationFailed,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_BUDGET = 2
EXIT_STALL = 3
EXIT_VERIFICATION = 4


@dataclass
class ErrorInfo:
    error_type: str
    error_message: str
    context: str
    category: str
    exit_code: int
    suggestions: List[str] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)


class ErrorHandler:
    """
    Maps isoset errors onto a category, a stable exit code and suggestions
    for the person running the command
    """

    def __init__(self) -> None:
        # First match wins, so subclasses come before their bases
        self.error_categories: List[Tuple[Type[BaseException], str, int]] = [
            (GraphInputError, "input_error", EXIT_INPUT),
            (PreconditionError, "input_error", EXIT_INPUT),
            (RetriesExhausted, "input_error", EXIT_INPUT),
            (OSError, "input_error", EXIT_INPUT),
            (BudgetExceeded, "budget", EXIT_BUDGET),
            (AlgorithmStalled, "algorithm_stall", EXIT_STALL),
            (BoundViolated, "algorithm_stall", EXIT_STALL),
            (VerificationFailed, "verification_failure", EXIT_VERIFICATION),
        ]

        # Checked ahead of error_categories for the named command only;
        # an explicit --method the graph does not support ends like a stall
        self.command_categories: Dict[str, List[Tuple[Type[BaseException], str, int]]] = {
            "bound": [
                (Not3Colorable, "method_unsuitable", EXIT_STALL),
                (NotBipartite, "method_unsuitable", EXIT_STALL),
            ],
        }

        self.error_suggestions = {
            "input_error": [
                "Check the graph file: header 'p <n> <m>', then one '<u> <v>' line per edge",
                "Vertex ids are 0-based and must be below n",
                "Bounds need a connected graph on at least 3 vertices",
            ],
            "budget": [
                "Raise the node budget with --budget",
                "The reported best bound is an upper bound only",
            ],
            "algorithm_stall": [
                "Keep the archived trace; it reproduces the run",
                "Re-run with --log-level DEBUG to see every sweep",
            ],
            "verification_failure": [
                "Compare the listed claims against the set or partition file",
            ],
            "method_unsuitable": [
                "Use --method auto to pick a method the graph supports",
            ],
            "internal": [
                "Re-run with --log-level DEBUG and report the traceback",
            ],
        }

        self.logger = logging.getLogger(__name__)

    def handle_error(self, error: BaseException, context: str = "unknown") -> ErrorInfo:
        """Classify the error, log it once and return what the CLI should report"""
        category, exit_code = self._categorize_error(error, context)
        info = ErrorInfo(
            error_type=type(error).__name__,
            error_message=str(error),
            context=context,
            category=category,
            exit_code=exit_code,
            suggestions=list(self.error_suggestions.get(category, [])),
            details=self._details(error),
        )

        if category == "internal":
            self.logger.exception(f"Error in {context}: {info.error_type} - {info.error_message}")
        elif category in ("budget", "algorithm_stall", "method_unsuitable"):
            self.logger.warning(f"{context}: {info.error_message}")
        else:
            self.logger.error(f"Error in {context}: {info.error_type} - {info.error_message}")

        return info

    def _categorize_error(self, error: BaseException, context: str = "unknown") -> Tuple[str, int]:
        for error_type, category, exit_code in self.command_categories.get(context, []) + self.error_categories:
            if isinstance(error, error_type):
                return category, exit_code
        return "internal", EXIT_INPUT

    def _details(self, error: BaseException) -> Dict[str, Any]:
        details: Dict[str, Any] = {}
        if isinstance(error, GraphInputError) and error.line_no is not None:
            details["line"] = error.line_no
        if isinstance(error, BudgetExceeded):
            details["nodes"] = error.nodes
            if error.best_bound is not None:
                details["best_bound"] = error.best_bound
        if isinstance(error, (AlgorithmStalled, BoundViolated)):
            details["reason"] = error.reason
            details["sweeps"] = len(error.trace)
        if isinstance(error, VerificationFailed):
            details["claims"] = list(error.claims)
        if isinstance(error, IsosetError) and not details:
            details["kind"] = type(error).__name__
        return details


error_handler = ErrorHandler()
