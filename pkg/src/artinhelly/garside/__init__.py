from .cells import (
    GCell,
    Interval,
    cell_intersection,
    cell_member,
    cell_of,
    cell_top,
    cell_vertices,
    helly_graph_vertices_adjacency,
    helly_neighbors,
    triple_cell_cover,
)
from .lattice import (
    alpha,
    canonical_length,
    infimum,
    join_p,
    join_s,
    meet_p,
    meet_s,
    omega,
    phi_apply,
    prefix_leq,
    star,
    suffix_geq,
    supremum,
)
from .loader import structure_from_file, structure_to_file
from .normal_form import (
    ONE,
    GrpElt,
    delta_power,
    inverse,
    multiply,
    normal_form,
    parse_word,
    render,
    simple_element,
    to_word,
)
from .rewriting import PositiveWordOracle
from .structure import GarsideStructure, garside_from_spherical

__all__ = [
    "ONE",
    "GCell",
    "GarsideStructure",
    "GrpElt",
    "Interval",
    "PositiveWordOracle",
    "alpha",
    "canonical_length",
    "cell_intersection",
    "cell_member",
    "cell_of",
    "cell_top",
    "cell_vertices",
    "delta_power",
    "garside_from_spherical",
    "helly_graph_vertices_adjacency",
    "helly_neighbors",
    "infimum",
    "inverse",
    "join_p",
    "join_s",
    "meet_p",
    "meet_s",
    "multiply",
    "normal_form",
    "omega",
    "parse_word",
    "phi_apply",
    "prefix_leq",
    "render",
    "simple_element",
    "star",
    "structure_from_file",
    "structure_to_file",
    "suffix_geq",
    "supremum",
    "to_word",
    "triple_cell_cover",
]
