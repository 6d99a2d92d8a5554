"""Vertex-colouring 2-edge-weightings: constructive strategies, group
realizers, and an exhaustive oracle."""

from .graph import Bipartition, Graph, build_graph, parse_edgelist
from .groups import GroupSpec, even_walk
from .oracle import brute_force_realization, brute_force_weighting
from .realizer import (
    lift_to_12,
    realize_group_coloring,
    realize_parity_bipartite,
    verify_weighting,
)
from .solver import SolveOptions, SolveReport, solve

__version__ = "0.1.0"

__all__ = [
    "Bipartition",
    "Graph",
    "GroupSpec",
    "SolveOptions",
    "SolveReport",
    "brute_force_realization",
    "brute_force_weighting",
    "build_graph",
    "even_walk",
    "lift_to_12",
    "parse_edgelist",
    "realize_group_coloring",
    "realize_parity_bipartite",
    "solve",
    "verify_weighting",
]
