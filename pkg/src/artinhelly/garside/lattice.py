from collections.abc import Callable, Iterable
from functools import reduce

from ..errors import InputError, NotSimple
from .normal_form import (
    ONE,
    GrpElt,
    inverse,
    multiply,
    right_multiply_delta_power,
    simple_element,
)
from .structure import IDENTITY, GarsideStructure


def infimum(x: GrpElt) -> int:
    return x.power


def supremum(x: GrpElt) -> int:
    return x.power + len(x.tail)


def canonical_length(x: GrpElt) -> int:
    return len(x.tail)


def is_positive(x: GrpElt) -> bool:
    return x.power >= 0


def as_simple(gs: GarsideStructure, x: GrpElt) -> int:
    if x == ONE:
        return IDENTITY
    if x.power == 1 and not x.tail:
        return gs.delta
    if x.power == 0 and len(x.tail) == 1:
        return x.tail[0]
    raise NotSimple(f"element with infimum {x.power} and {len(x.tail)} factors")


def prefix_leq(gs: GarsideStructure, x: GrpElt, y: GrpElt) -> bool:
    """x ≼ y, i.e. y = xz with z positive."""
    return is_positive(multiply(gs, inverse(gs, x), y))


def suffix_geq(gs: GarsideStructure, y: GrpElt, x: GrpElt) -> bool:
    """y ≽ x, i.e. y = zx with z positive."""
    return is_positive(multiply(gs, y, inverse(gs, x)))


def alpha(gs: GarsideStructure, x: GrpElt) -> int:
    """Maximal simple prefix of a positive element."""
    if x.power < 0:
        raise InputError("alpha is defined on positive elements only")
    if x.power > 0:
        return gs.delta
    return x.tail[0] if x.tail else IDENTITY


def omega(gs: GarsideStructure, x: GrpElt) -> int:
    """Maximal simple suffix of a positive element, grown one atom at a time."""
    if x.power < 0:
        raise InputError("omega is defined on positive elements only")
    suffix = IDENTITY
    grown = True
    while grown:
        grown = False
        for atom in gs.atoms:
            candidate = int(gs.product[atom, suffix])
            if candidate >= 0 and suffix_geq(gs, x, simple_element(gs, candidate)):
                suffix = candidate
                grown = True
                break
    return suffix


def _left_shift(x: GrpElt, k: int) -> GrpElt:
    return GrpElt(x.power + k, x.tail)


def _meet_p_pair(gs: GarsideStructure, x: GrpElt, y: GrpElt) -> GrpElt:
    shift = -min(x.power, y.power, 0)
    x, y = _left_shift(x, shift), _left_shift(y, shift)
    result = ONE
    while True:
        head = int(gs.meet_p[alpha(gs, x), alpha(gs, y)])
        if head == IDENTITY:
            break
        step = simple_element(gs, head)
        result = multiply(gs, result, step)
        x = multiply(gs, inverse(gs, step), x)
        y = multiply(gs, inverse(gs, step), y)
    return _left_shift(result, -shift)


def _meet_s_pair(gs: GarsideStructure, x: GrpElt, y: GrpElt) -> GrpElt:
    shift = -min(x.power, y.power, 0)
    x = right_multiply_delta_power(gs, x, shift)
    y = right_multiply_delta_power(gs, y, shift)
    result = ONE
    while True:
        tail = int(gs.meet_s[omega(gs, x), omega(gs, y)])
        if tail == IDENTITY:
            break
        step = simple_element(gs, tail)
        result = multiply(gs, step, result)
        x = multiply(gs, x, inverse(gs, step))
        y = multiply(gs, y, inverse(gs, step))
    return right_multiply_delta_power(gs, result, -shift)


PairOperation = Callable[[GarsideStructure, GrpElt, GrpElt], GrpElt]


def _fold(
    gs: GarsideStructure, pair: PairOperation, first: GrpElt, rest: Iterable[GrpElt]
) -> GrpElt:
    return reduce(lambda acc, z: pair(gs, acc, z), rest, first)


def meet_p(gs: GarsideStructure, x: GrpElt, *others: GrpElt) -> GrpElt:
    return _fold(gs, _meet_p_pair, x, others)


def meet_s(gs: GarsideStructure, x: GrpElt, *others: GrpElt) -> GrpElt:
    return _fold(gs, _meet_s_pair, x, others)


def join_p(gs: GarsideStructure, x: GrpElt, *others: GrpElt) -> GrpElt:
    inverted = [inverse(gs, z) for z in others]
    return inverse(gs, meet_s(gs, inverse(gs, x), *inverted))


def join_s(gs: GarsideStructure, x: GrpElt, *others: GrpElt) -> GrpElt:
    inverted = [inverse(gs, z) for z in others]
    return inverse(gs, meet_p(gs, inverse(gs, x), *inverted))


def star(gs: GarsideStructure, a: int) -> int:
    return gs.star_of(a)


def phi_apply(gs: GarsideStructure, x: GrpElt, k: int = 1) -> GrpElt:
    """Δ^-k x Δ^k."""
    return _left_shift(right_multiply_delta_power(gs, x, k), -k)
