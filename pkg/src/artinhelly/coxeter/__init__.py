from .cell import cell_sink, cell_source, oriented_coxeter_cell, to_dot
from .graph import DefiningGraph, load_graph
from .group import (
    CoxElt,
    CoxeterGroup,
    TitsRepresentation,
    cayley_distance,
    enumerate_group,
    longest_element,
)
from .parabolic import (
    ParabolicCoset,
    all_cosets,
    check_coset_helly,
    coset,
    coset_family_intersection,
    gate,
    minimal_coset_representative,
    parabolic_subgroup,
)
from .weak_order import Side, check_lattice, weak_join, weak_leq, weak_meet

__all__ = [
    "CoxElt",
    "CoxeterGroup",
    "DefiningGraph",
    "ParabolicCoset",
    "Side",
    "TitsRepresentation",
    "all_cosets",
    "cayley_distance",
    "cell_sink",
    "cell_source",
    "check_coset_helly",
    "check_lattice",
    "coset",
    "coset_family_intersection",
    "enumerate_group",
    "gate",
    "load_graph",
    "longest_element",
    "minimal_coset_representative",
    "oriented_coxeter_cell",
    "parabolic_subgroup",
    "to_dot",
    "weak_join",
    "weak_leq",
    "weak_meet",
]
