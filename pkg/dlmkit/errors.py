"""Exception types raised by dlmkit."""

from typing import Optional


class DlmkitError(Exception):
    """Base class for every error raised by the toolkit."""


class GraphError(DlmkitError):
    """Invalid graph construction: bad vertex ids, loops, or size cap exceeded."""


class Graph6Error(GraphError):
    """Malformed graph6 text."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class DisconnectedGraph(GraphError):
    """A distance-based operation was asked of a disconnected graph."""


class DiameterTooLarge(GraphError):
    """The diameter-2 spectral transfer rule was applied to a graph of diameter > 2."""


class SpectrumError(DlmkitError):
    """A spectrum handed to a transfer rule is not a valid Laplacian spectrum."""


class ConvergenceError(DlmkitError):
    """The Jacobi eigensolver exhausted its sweep budget."""


class FamilyError(DlmkitError):
    """Unknown family tag or parameters violating the family's existence conditions."""


class EnumerationError(DlmkitError):
    """Enumeration requested outside the built-in range and no corpus given."""


class CanonicalFormError(DlmkitError):
    """Canonical form requested above its vertex cap."""
