from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from ..errors import UnknownAtom
from .structure import IDENTITY, GarsideStructure

Letter = tuple[int, int]
"""An atom position and an exponent of +1 or -1."""


@dataclass(frozen=True)
class GrpElt:
    """Δ^power · tail, with the tail left-weighted and no factor equal to 1 or Δ."""

    power: int
    tail: tuple[int, ...] = ()

    @property
    def is_positive(self) -> bool:
        return self.power >= 0


ONE = GrpElt(0, ())


def simple_element(gs: GarsideStructure, a: int) -> GrpElt:
    gs.require_simple(a)
    if a == IDENTITY:
        return ONE
    if a == gs.delta:
        return GrpElt(1, ())
    return GrpElt(0, (a,))


def delta_power(gs: GarsideStructure, k: int) -> GrpElt:
    return GrpElt(k, ())


def _phi_power(gs: GarsideStructure, k: int) -> np.ndarray:
    permutation = np.arange(gs.size, dtype=np.int32)
    step = gs.phi if k >= 0 else gs.phi_inverse
    for _ in range(abs(k)):
        permutation = step[permutation]
    return permutation


def _absorb_deltas(gs: GarsideStructure, power: int, factors: list[int]) -> GrpElt:
    start = 0
    while start < len(factors) and factors[start] == gs.delta:
        start += 1
    end = len(factors)
    while end > start and factors[end - 1] == IDENTITY:
        end -= 1
    return GrpElt(power + start, tuple(factors[start:end]))


def right_multiply_simple(gs: GarsideStructure, x: GrpElt, s: int) -> GrpElt:
    """Append a simple and restore left-weightedness with one right-to-left pass."""
    if s == IDENTITY:
        return x
    factors = list(x.tail) + [s]
    for i in range(len(factors) - 2, -1, -1):
        t = int(gs.meet_p[gs.star[factors[i]], factors[i + 1]])
        if t == IDENTITY:
            break
        factors[i] = int(gs.product[factors[i], t])
        factors[i + 1] = int(gs.left_quotient[t, factors[i + 1]])
    return _absorb_deltas(gs, x.power, factors)


def right_multiply_delta_power(gs: GarsideStructure, x: GrpElt, k: int) -> GrpElt:
    # X Δ^k = Δ^k φ^k(X)
    if k == 0:
        return x
    permutation = _phi_power(gs, k)
    return GrpElt(x.power + k, tuple(int(permutation[f]) for f in x.tail))


def right_multiply_letter(gs: GarsideStructure, x: GrpElt, letter: Letter) -> GrpElt:
    position, exponent = letter
    if not 0 <= position < len(gs.atoms):
        raise UnknownAtom(f"atom position {position} outside this structure")
    atom = gs.atoms[position]
    if exponent > 0:
        return right_multiply_simple(gs, x, atom)
    # a^-1 = Δ^-1 · *a
    return right_multiply_simple(
        gs, right_multiply_delta_power(gs, x, -1), int(gs.left_star[atom])
    )


def multiply(gs: GarsideStructure, x: GrpElt, y: GrpElt) -> GrpElt:
    result = right_multiply_delta_power(gs, x, y.power)
    for s in y.tail:
        result = right_multiply_simple(gs, result, s)
    return result


def inverse(gs: GarsideStructure, x: GrpElt) -> GrpElt:
    result = ONE
    for s in reversed(x.tail):
        result = right_multiply_simple(
            gs, right_multiply_delta_power(gs, result, -1), int(gs.left_star[s])
        )
    return right_multiply_delta_power(gs, result, -x.power)


def normal_form(gs: GarsideStructure, word: Iterable[Letter]) -> GrpElt:
    result = ONE
    for letter in word:
        result = right_multiply_letter(gs, result, letter)
    return result


def parse_word(gs: GarsideStructure, text: str) -> list[Letter]:
    """Tokens are atom names, optionally with ^-1 or ⁻¹; an upper-case name inverts."""
    letters: list[Letter] = []
    for token in text.replace("·", " ").split():
        if token in ("1", "e"):
            continue
        exponent = 1
        for suffix in ("^-1", "⁻¹", "'"):
            if token.endswith(suffix):
                token, exponent = token[: -len(suffix)], -1
                break
        if token in gs.atom_names:
            letters.append((gs.atom_names.index(token), exponent))
        elif token.lower() in gs.atom_names and token != token.lower():
            letters.append((gs.atom_names.index(token.lower()), -exponent))
        else:
            raise UnknownAtom(f"'{token}' is not an atom of this structure")
    return letters


def _simple_word(gs: GarsideStructure, s: int) -> list[int]:
    """Atom positions spelling a simple, greedily peeling atom prefixes."""
    word: list[int] = []
    while s != IDENTITY:
        for position, atom in enumerate(gs.atoms):
            rest = int(gs.left_quotient[atom, s])
            if rest >= 0:
                word.append(position)
                s = rest
                break
    return word


def to_word(gs: GarsideStructure, x: GrpElt) -> list[Letter]:
    delta_word = _simple_word(gs, gs.delta)
    letters: list[Letter] = []
    if x.power >= 0:
        for _ in range(x.power):
            letters.extend((p, 1) for p in delta_word)
    else:
        for _ in range(-x.power):
            letters.extend((p, -1) for p in reversed(delta_word))
    for s in x.tail:
        letters.extend((p, 1) for p in _simple_word(gs, s))
    return letters


def render(gs: GarsideStructure, x: GrpElt) -> str:
    head = f"Δ^{x.power}"
    if not x.tail:
        return head if x.power != 0 else f"{head} · ()"
    return " · ".join([head] + [gs.names[f] for f in x.tail])


def render_word(gs: GarsideStructure, word: Sequence[Letter]) -> str:
    return " ".join(
        gs.atom_names[p] if e > 0 else f"{gs.atom_names[p]}^-1" for p, e in word
    ) or "1"


def is_left_weighted(gs: GarsideStructure, x: GrpElt) -> bool:
    for a, b in zip(x.tail, x.tail[1:]):
        if gs.meet_p[gs.star[a], b] != IDENTITY:
            return False
    return all(f not in (IDENTITY, gs.delta) for f in x.tail)
