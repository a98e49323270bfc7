"""Symplectic leaves of Calogero-Moser spaces via quiver varieties, in exact arithmetic."""

from .roots import Graph, InvalidInput, InvariantViolation, build_mckay_graph
from .leaves import enumerate_leaves, hasse_diagram, normalization_of_closure
from .params import CyclicK, DirectBC, TypeB, to_bc

__all__ = [
    "Graph", "InvalidInput", "InvariantViolation", "build_mckay_graph",
    "enumerate_leaves", "hasse_diagram", "normalization_of_closure",
    "CyclicK", "DirectBC", "TypeB", "to_bc",
]
