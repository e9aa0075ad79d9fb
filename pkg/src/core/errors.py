"""
Exception hierarchy.

Library code raises these; only the command-line layer turns them into
exit codes and log records.
"""

from __future__ import annotations


class PartiteError(Exception):
    """Base class for every error raised by the package."""


class InvalidArguments(PartiteError, ValueError):
    """Arguments violate an operation's preconditions."""


class InvalidSubset(InvalidArguments):
    """A vertex subset is not strictly increasing or has the wrong size."""


class VertexOutOfRange(InvalidArguments):
    """A vertex id is negative or not smaller than the vertex count."""


class NotASet(InvalidArguments):
    """An edge tuple repeats a vertex."""


class InvalidDensity(InvalidArguments):
    """An edge density lies outside (0, 1]."""


class NoEdges(PartiteError):
    """The hypergraph has no edges, so its density is zero."""


class WitnessNotFound(PartiteError):
    """No candidate set reached the link-size threshold (forced mode only)."""


class InternalInvariantViolation(PartiteError):
    """A guarantee of the algorithm did not hold; this signals a bug."""


class InstanceTooLarge(PartiteError):
    """The instance exceeds a configured or representable size limit."""


class FormatError(PartiteError, ValueError):
    """A hypergraph or witness file does not follow the text format."""

    def __init__(self, message: str, line: int | None = None) -> None:
        """
        Initialize FormatError.

        Args:
            message: What is wrong with the input
            line: 1-based line number of the offending line, if known
        """
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
