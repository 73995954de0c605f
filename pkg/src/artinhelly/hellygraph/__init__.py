from .checks import (
    ball_helly_check,
    clique_helly_check,
    helly_criterion_check,
    intersection_graph,
    maximal_cliques,
    maximal_cliques_through,
    sweep_families,
)
from .graph import SimpleGraph, ball_of, complete, cycle, load_edge_list, octahedron, path
from .thickening import TranslationThickening, thickening

__all__ = [
    "SimpleGraph",
    "TranslationThickening",
    "ball_helly_check",
    "ball_of",
    "clique_helly_check",
    "complete",
    "cycle",
    "helly_criterion_check",
    "intersection_graph",
    "load_edge_list",
    "maximal_cliques",
    "maximal_cliques_through",
    "octahedron",
    "path",
    "sweep_families",
    "thickening",
]
