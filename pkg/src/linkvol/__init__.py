"""Certified two-sided hyperbolic volume bounds for highly twisted link diagrams."""

from .diagram import Face, PlanarDiagram, face_structure, parse_json, parse_pd
from .errors import (
    DiagramValidityError,
    DisconnectedDiagramError,
    DomainError,
    EmbeddingError,
    InapplicableError,
    LinkvolError,
    NoSolutionError,
    PDSyntaxError,
)

__version__ = "0.1.0"

__all__ = [
    "Face",
    "PlanarDiagram",
    "face_structure",
    "parse_json",
    "parse_pd",
    "LinkvolError",
    "PDSyntaxError",
    "DiagramValidityError",
    "EmbeddingError",
    "DisconnectedDiagramError",
    "DomainError",
    "NoSolutionError",
    "InapplicableError",
]
