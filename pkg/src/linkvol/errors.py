"""Exception hierarchy shared across the package."""

from __future__ import annotations


class LinkvolError(Exception):
    """Base class for all linkvol errors."""


class PDSyntaxError(LinkvolError):
    """Malformed PD text; carries the 1-based line and column of the offender."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class DiagramValidityError(LinkvolError):
    """Structurally invalid diagram data (labels, arity, counts)."""


class EmbeddingError(DiagramValidityError):
    """The rotation system does not describe a planar (sphere) embedding."""


class DisconnectedDiagramError(DiagramValidityError):
    """Operation requires a connected diagram (split links are rejected)."""


class DomainError(LinkvolError, ValueError):
    """Numeric argument outside the documented domain of a special function."""


class NoSolutionError(DomainError):
    """Root equation has no solution for the requested value."""


class InapplicableError(LinkvolError):
    """Hypotheses of the bound being requested do not hold for this input."""
