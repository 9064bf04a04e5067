"""Exact and constructive tools for minimum independent transversals
(vertex cover, feedback vertex set, odd cycle transversal) on small graphs."""

from .errors import (
    Graph6Error,
    GraphSizeError,
    PreconditionError,
    SettledQuery,
    StructuralViolation,
    UnsupportedError,
)
from .graph import Graph, canonical_form, from_graph6, read_graph6_file, to_graph6
from .patterns import pattern
from .recognition import Certificate, contains_induced, is_bipartite, is_near_bipartite, is_three_colourable
from .solvers import MEASURES, Solution, measure, min_fvs, min_ifvs, min_ioct, min_ivc, min_oct, min_vc

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "Graph",
    "Graph6Error",
    "GraphSizeError",
    "MEASURES",
    "PreconditionError",
    "SettledQuery",
    "Solution",
    "StructuralViolation",
    "UnsupportedError",
    "canonical_form",
    "contains_induced",
    "from_graph6",
    "is_bipartite",
    "is_near_bipartite",
    "is_three_colourable",
    "measure",
    "min_fvs",
    "min_ifvs",
    "min_ioct",
    "min_ivc",
    "min_oct",
    "min_vc",
    "pattern",
    "read_graph6_file",
    "to_graph6",
]
