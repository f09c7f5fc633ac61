"""Nilpotent K-orbits of classical symmetric pairs, their orbit graphs and checks."""

from .partitions import PairType, Partition, SignatureError, ShapeError
from .signed_diagrams import SignedDiagram, enumerate_syd, pi_vector, from_pi
from .orbit_graph import build_graph, components_bfs, component_count_formula, classify

__all__ = [
    "PairType", "Partition", "SignatureError", "ShapeError", "SignedDiagram",
    "enumerate_syd", "pi_vector", "from_pi", "build_graph", "components_bfs",
    "component_count_formula", "classify",
]
__version__ = "0.1.0"
