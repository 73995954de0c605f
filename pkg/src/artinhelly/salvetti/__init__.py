from .amalgam import AmalgamOracle, peel_leaf_clique
from .ball import CayleyBall, build_ball
from .cells import (
    SCell,
    StdSubcomplex,
    XInterval,
    cell_intersection_x,
    cells_in_ball,
    coxeter_projection,
    face_through,
    family_intersection,
    is_face,
    make_cell,
    standard_subcomplex,
    thickening_neighbors,
)
from .cover import TripleCover, triple_max_cell_cover
from .fc import FCGraph, certify_fc
from .oracles import (
    RightAngledOracle,
    SphericalOracle,
    TrivialOracle,
    WordOracle,
    choose_oracle,
)
from .synthetic import SyntheticComplex, check_synthetic, load_synthetic
from .verify import CellHellyRun, cell_helly_verify

__all__ = [
    "AmalgamOracle",
    "CayleyBall",
    "CellHellyRun",
    "FCGraph",
    "RightAngledOracle",
    "SCell",
    "SphericalOracle",
    "StdSubcomplex",
    "SyntheticComplex",
    "TripleCover",
    "TrivialOracle",
    "WordOracle",
    "XInterval",
    "build_ball",
    "cell_helly_verify",
    "cell_intersection_x",
    "cells_in_ball",
    "certify_fc",
    "check_synthetic",
    "choose_oracle",
    "coxeter_projection",
    "face_through",
    "family_intersection",
    "is_face",
    "load_synthetic",
    "make_cell",
    "peel_leaf_clique",
    "standard_subcomplex",
    "thickening_neighbors",
    "triple_max_cell_cover",
]
