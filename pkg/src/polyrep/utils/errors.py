"""Exception hierarchy for polyrep.

Every error carries the process exit code the command-line tools report for it.
"""
from typing import Any, Optional


class PolyrepError(Exception):
    """Base class for all polyrep errors."""

    exit_code = 1


class ValidationError(PolyrepError):
    """The H-representation is not a bounded, irredundant, simple polytope."""

    exit_code = 2

    def __init__(self, message: str, report: Optional[Any] = None):
        super().__init__(message)
        self.report = report


class NoVerticesError(ValidationError):
    """No d-subset of rows meets in a feasible point."""


class NotPointedError(ValidationError):
    """The polyhedron contains a line, so it has no vertex."""


class BoundedInputError(ValidationError):
    """A bounded input was handed to an operation meant for unbounded polyhedra."""


class EquivalenceError(PolyrepError):
    """The two membership oracles disagree, or a structural check failed."""

    exit_code = 3


class ResourceGuardError(PolyrepError):
    """A configured size limit would be exceeded."""

    exit_code = 4


class ParseError(PolyrepError):
    """Malformed input document."""

    exit_code = 5

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        location = ""
        if line is not None:
            location = f"line {line}"
            if column is not None:
                location += f", column {column}"
            location += ": "
        super().__init__(f"{location}{message}")
        self.line = line
        self.column = column
        self.reason = message


class ConstructionError(PolyrepError):
    """An internal invariant of the construction was violated."""
