from dataclasses import dataclass

from loguru import logger

from ..coxeter.graph import Clique
from ..coxeter.parabolic import minimal_coset_representative
from ..errors import NotFC, NotPairwiseIntersecting, ProofClaimViolation, StructureViolation
from ..garside.cells import GCell, triple_cell_cover
from ..garside.normal_form import inverse, normal_form
from ..garside.normal_form import to_word as garside_word
from .ball import CayleyBall
from .cells import SCell, XInterval, family_intersection, intersection_type, make_cell
from .fc import FCGraph


PAIRS = ((0, 1), (1, 2), (2, 0))


@dataclass(frozen=True)
class TripleCover:
    cell: SCell
    case: int
    pivot: int
    pivot_type: Clique


def _claim(holds: bool, claim: str) -> None:
    if not holds:
        raise ProofClaimViolation(f"maximal cell cover: {claim}")


def _face_source(fc: FCGraph, cell: SCell, p: int, pivot_type: Clique) -> GCell:
    """The face of ``cell`` through p of type Γᵢ ∩ Γ₀, as a Garside cell of A_{Γ₀} based at p."""
    group = fc.group(cell.cell_type)
    shared = [s for s, g in enumerate(cell.cell_type) if g in pivot_type]
    u = cell.position(p)
    v = minimal_coset_representative(group, u, shared)
    r = group.mul(int(group.inverse[v]), u)
    gs = fc.structure(pivot_type)
    letters = [(pivot_type.index(cell.cell_type[s]), 1) for s in group.words[r]]
    return GCell(base=inverse(gs, normal_form(gs, letters)))


def _pivot_type(
    ball: CayleyBall, cells: tuple[SCell, ...], intersections: list[XInterval], case: int
) -> Clique:
    types = [c.cell_type for c in cells]
    if case == 1:
        return types[0]
    if case == 2:
        return next(t for t in types if types.count(t) == 2)
    union: set[int] = set()
    for (i, _), common in zip(PAIRS, intersections):
        union |= set(intersection_type(ball, cells[i], common))
    return tuple(sorted(union))


def triple_max_cell_cover(
    ball: CayleyBall, fc: FCGraph, c1: SCell, c2: SCell, c3: SCell
) -> TripleCover:
    """A maximal cell containing the pairwise intersections of three maximal cells.

    Case 1, one type Γ for all three cells: they lie in the standard subcomplex
    of type Γ through a common vertex p and the spherical cover applies there.
    Case 2, two cells of type Γ: the third is cut down to its face of type
    Γ₃ ∩ Γ through p. Case 3, three types: Γ₀ is the union of the types of the
    pairwise intersections, the smallest clique holding them, and every cell
    is cut down to its face of type Γᵢ ∩ Γ₀ through p. The cover found in A_{Γ₀}
    is extended to a maximal clique.
    """
    cells = (c1, c2, c3)
    for c in cells:
        if not fc.is_maximal(c.cell_type):
            raise StructureViolation("cover input cells are maximal", str(c.cell_type))
    intersections = []
    for i, j in PAIRS:
        common = family_intersection(ball, fc, (cells[i], cells[j]))
        if common is None:
            raise NotPairwiseIntersecting(f"cells {i + 1} and {j + 1} are disjoint")
        intersections.append(common)
    triple = family_intersection(ball, fc, cells)
    if triple is None:
        raise ProofClaimViolation("maximal cell cover: pairwise intersecting cells share a vertex")
    p = triple.low
    case = len({c.cell_type for c in cells})
    pivot_type = _pivot_type(ball, cells, intersections, case)
    if pivot_type not in fc.cliques:
        raise NotFC(fc.graph.names(pivot_type))
    source_key = ball.keys[p]
    if pivot_type:
        # pairwise intersections meet only at p when the pivot type is empty
        gs = fc.structure(pivot_type)
        faces = [_face_source(fc, c, p, pivot_type) for c in cells]
        cover = triple_cell_cover(gs, *faces)
        word = [(pivot_type[s], e) for s, e in garside_word(gs, cover.base)]
        source_key = ball.oracle.multiply_word(source_key, word)
    if source_key not in ball:
        raise StructureViolation("cover lies inside the ball", ball.render(p))
    cover_type = fc.maximal_clique_containing(pivot_type)
    cell = make_cell(ball, fc, ball.index[source_key], cover_type)
    if cell is None:
        raise StructureViolation("cover lies inside the ball", ball.render(p))
    union_of_pairs = frozenset().union(*(common.vertices for common in intersections))
    _claim(union_of_pairs <= cell.vertex_set, "the pairwise intersections lie in the cover")
    logger.debug(f"Triple cover at {ball.render(p)}: case {case}, pivot type {pivot_type}")
    return TripleCover(cell=cell, case=case, pivot=p, pivot_type=pivot_type)
