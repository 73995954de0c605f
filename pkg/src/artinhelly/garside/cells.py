from dataclasses import dataclass

import numpy as np
from loguru import logger

from ..errors import InputError, NotPairwiseIntersecting, ProofClaimViolation
from .lattice import (
    as_simple,
    infimum,
    join_p,
    meet_p,
    prefix_leq,
    supremum,
)
from .normal_form import (
    ONE,
    GrpElt,
    inverse,
    multiply,
    right_multiply_delta_power,
    simple_element,
)
from .structure import IDENTITY, GarsideStructure


@dataclass(frozen=True)
class GCell:
    """The interval [base, base·Δ^power]."""

    base: GrpElt
    power: int = 1


@dataclass(frozen=True)
class Interval:
    low: GrpElt
    high: GrpElt


def cell_of(gs: GarsideStructure, f: GrpElt, power: int = 1) -> GCell:
    if power < 1:
        raise InputError(f"cell power must be positive, got {power}")
    return GCell(base=f, power=power)


def cell_top(gs: GarsideStructure, c: GCell) -> GrpElt:
    return right_multiply_delta_power(gs, c.base, c.power)


def cell_member(gs: GarsideStructure, c: GCell, x: GrpElt) -> bool:
    offset = multiply(gs, inverse(gs, c.base), x)
    return infimum(offset) >= 0 and supremum(offset) <= c.power


def _left_weighted_tails(gs: GarsideStructure, length: int) -> list[tuple[int, ...]]:
    middle = [s for s in range(gs.size) if s not in (IDENTITY, gs.delta)]
    tails: list[tuple[int, ...]] = [()]
    frontier: list[tuple[int, ...]] = [()]
    for _ in range(length):
        following = []
        for tail in frontier:
            for s in middle:
                if not tail or gs.meet_p[gs.star[tail[-1]], s] == IDENTITY:
                    following.append(tail + (s,))
        tails.extend(following)
        frontier = following
    return tails


def divisors_of_delta_power(gs: GarsideStructure, k: int) -> list[GrpElt]:
    """Positive elements with supremum at most k, in normal form."""
    found: list[GrpElt] = []
    for p in range(k + 1):
        found.extend(GrpElt(p, tail) for tail in _left_weighted_tails(gs, k - p))
    return found


def cell_vertices(gs: GarsideStructure, c: GCell) -> list[GrpElt]:
    if c.power == 1:
        offsets = [simple_element(gs, s) for s in range(gs.size)]
    else:
        offsets = divisors_of_delta_power(gs, c.power)
    return [multiply(gs, c.base, z) for z in offsets]


def cell_intersection(gs: GarsideStructure, c1: GCell, c2: GCell) -> Interval | None:
    low = join_p(gs, c1.base, c2.base)
    high = meet_p(gs, cell_top(gs, c1), cell_top(gs, c2))
    if not prefix_leq(gs, low, high):
        return None
    return Interval(low=low, high=high)


def interval_member(gs: GarsideStructure, interval: Interval, x: GrpElt) -> bool:
    return prefix_leq(gs, interval.low, x) and prefix_leq(gs, x, interval.high)


def interval_vertices(
    gs: GarsideStructure, interval: Interval, within: GCell
) -> set[GrpElt]:
    return {x for x in cell_vertices(gs, within) if interval_member(gs, interval, x)}


def certify_intersection(
    gs: GarsideStructure, c1: GCell, c2: GCell, interval: Interval | None
) -> bool:
    """Compare an intersection against the vertex sets of both cells."""
    shared = set(cell_vertices(gs, c1)) & set(cell_vertices(gs, c2))
    if interval is None:
        return not shared
    return shared == interval_vertices(gs, interval, c1)


def _claim(holds: bool, claim: str) -> None:
    if not holds:
        raise ProofClaimViolation(f"triple cell cover: {claim}")


def _pairwise_bound(join: np.ndarray, meet: np.ndarray, w: list[int]) -> int:
    """(w0 ∧ w1) ∨ (w1 ∧ w2) ∨ (w2 ∧ w0) in the simples lattice."""
    return int(join[join[meet[w[0], w[1]], meet[w[1], w[2]]], meet[w[2], w[0]]])


def triple_cell_cover(gs: GarsideStructure, c1: GCell, c2: GCell, c3: GCell) -> GCell:
    """A single cell containing the pairwise intersections of three cells."""
    cells = (c1, c2, c3)
    if any(c.power != 1 for c in cells):
        raise InputError("triple cell cover is defined for cells [f, fΔ]")
    for i, j in ((0, 1), (1, 2), (2, 0)):
        if cell_intersection(gs, cells[i], cells[j]) is None:
            raise NotPairwiseIntersecting(f"cells {i + 1} and {j + 1} are disjoint")
    f = [c.base for c in cells]
    g = [cell_top(gs, c) for c in cells]
    h = join_p(gs, *f)
    _claim(prefix_leq(gs, h, meet_p(gs, *g)), "h lies in every cell")
    w = [as_simple(gs, multiply(gs, inverse(gs, fi), h)) for fi in f]
    w_star = [int(gs.star[wi]) for wi in w]
    pairs = ((0, 1), (1, 2), (2, 0))
    f_pair = [join_p(gs, f[i], f[j]) for i, j in pairs]
    g_pair = [meet_p(gs, g[i], g[j]) for i, j in pairs]
    low = meet_p(gs, *f_pair)
    high = join_p(gs, *g_pair)
    a = _pairwise_bound(gs.join_s, gs.meet_s, w)
    b = _pairwise_bound(gs.join_p, gs.meet_p, w_star)
    _claim(multiply(gs, low, simple_element(gs, a)) == h, "f·a = h")
    _claim(multiply(gs, h, simple_element(gs, b)) == high, "h·b = g")
    _claim(gs.product[a, b] >= 0, "ab ≼ Δ")
    cover = GCell(base=low)
    for fp, gp in zip(f_pair, g_pair):
        _claim(
            prefix_leq(gs, low, fp) and prefix_leq(gs, gp, cell_top(gs, cover)),
            "pairwise intersection inside the cover",
        )
    logger.debug(f"Triple cover with a={gs.names[a]}, b={gs.names[b]}")
    return cover


def helly_graph_vertices_adjacency(gs: GarsideStructure, f: GrpElt, g: GrpElt) -> bool:
    """f and g share a cell, i.e. f⁻¹g = a⁻¹b for simples a, b."""
    offset = multiply(gs, inverse(gs, f), g)
    return infimum(offset) >= -1 and supremum(offset) <= 1


def helly_neighbors(gs: GarsideStructure, f: GrpElt) -> set[GrpElt]:
    offsets = {
        multiply(gs, inverse(gs, simple_element(gs, a)), simple_element(gs, b))
        for a in range(gs.size)
        for b in range(gs.size)
    }
    return {multiply(gs, f, z) for z in offsets if z != ONE}


def check_complement_duality(gs: GarsideStructure) -> list[str]:
    """Complement dualities of the simples, exhaustively over pairs."""
    violations: list[str] = []
    for a in range(gs.size):
        for b in range(gs.size):
            if bool(gs.suffix_leq[a, b]) != bool(gs.prefix_leq[gs.star[b], gs.star[a]]):
                violations.append(f"order reversal of star at ({gs.names[a]}, {gs.names[b]})")
            if gs.star[gs.meet_s[a, b]] != gs.join_p[gs.star[a], gs.star[b]]:
                violations.append(f"(a ∧s b)* = a* ∨p b* at ({gs.names[a]}, {gs.names[b]})")
            if gs.star[gs.join_s[a, b]] != gs.meet_p[gs.star[a], gs.star[b]]:
                violations.append(f"(a ∨s b)* = a* ∧p b* at ({gs.names[a]}, {gs.names[b]})")
    return violations
