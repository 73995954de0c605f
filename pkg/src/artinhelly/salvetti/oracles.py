from abc import ABC, abstractmethod
from collections.abc import Hashable, Iterable, Sequence

from ..coxeter.graph import Clique, DefiningGraph
from ..errors import InputError, OracleUnsupported, UnknownAtom
from ..formats.models import OracleKind
from ..garside.lattice import meet_p
from ..garside.normal_form import ONE, GrpElt, inverse, multiply, right_multiply_letter
from ..garside.normal_form import to_word as garside_word
from ..garside.structure import GarsideStructure
from .fc import FCGraph

Letter = tuple[int, int]
"""A generator of the ambient defining graph and an exponent of +1 or -1."""
Key = Hashable


def inverse_word(word: Sequence[Letter]) -> list[Letter]:
    return [(g, -e) for g, e in reversed(word)]


class WordOracle(ABC):
    """Canonical forms for elements of the Artin group on ``generators``."""

    kind: OracleKind

    def __init__(self, graph: DefiningGraph, generators: Iterable[int]) -> None:
        self.graph = graph
        self.generators: tuple[int, ...] = tuple(sorted(generators))

    @property
    @abstractmethod
    def identity(self) -> Key: ...

    @abstractmethod
    def multiply_letter(self, key: Key, letter: Letter) -> Key: ...

    @abstractmethod
    def to_word(self, key: Key) -> list[Letter]: ...

    @abstractmethod
    def in_parabolic(self, key: Key, subset: Iterable[int]) -> bool:
        """Whether the element lies in the standard parabolic subgroup on a clique."""

    def word_in(self, key: Key, subset: Iterable[int]) -> list[Letter]:
        """A word for an element of the parabolic subgroup on ``subset`` using only its letters."""
        word = self.to_word(key)
        allowed = set(subset)
        if any(g not in allowed for g, _ in word):
            raise OracleUnsupported(
                f"element {self.render(key)} is not spelled inside {sorted(allowed)}"
            )
        return word

    def _check_letter(self, letter: Letter) -> None:
        g, e = letter
        if g not in self.generators or e not in (1, -1):
            raise UnknownAtom(f"letter {letter} outside generators {self.generators}")

    def multiply_word(self, key: Key, word: Iterable[Letter]) -> Key:
        for letter in word:
            key = self.multiply_letter(key, letter)
        return key

    def canonical(self, word: Iterable[Letter]) -> Key:
        return self.multiply_word(self.identity, word)

    def inverse(self, key: Key) -> Key:
        return self.canonical(inverse_word(self.to_word(key)))

    def render(self, key: Key) -> str:
        word = self.to_word(key)
        if not word:
            return "1"
        return " ".join(
            self.graph.vertices[g] if e > 0 else f"{self.graph.vertices[g]}^-1" for g, e in word
        )

    def parse(self, text: str) -> list[Letter]:
        letters: list[Letter] = []
        for token in text.replace("·", " ").split():
            if token in ("1", "e"):
                continue
            exponent = 1
            for suffix in ("^-1", "⁻¹"):
                if token.endswith(suffix):
                    token, exponent = token[: -len(suffix)], -1
            try:
                letters.append((self.graph.index(token), exponent))
            except InputError as e:
                raise UnknownAtom(e.message) from e
        return letters


class TrivialOracle(WordOracle):
    kind = OracleKind.TRIVIAL

    def __init__(self, graph: DefiningGraph) -> None:
        super().__init__(graph, ())

    @property
    def identity(self) -> Key:
        return ()

    def multiply_letter(self, key: Key, letter: Letter) -> Key:
        self._check_letter(letter)
        return key

    def to_word(self, key: Key) -> list[Letter]:
        return []

    def in_parabolic(self, key: Key, subset: Iterable[int]) -> bool:
        return True


class SphericalOracle(WordOracle):
    """Garside normal forms of the spherical Artin group on a clique."""

    kind = OracleKind.SPHERICAL

    def __init__(self, fc: FCGraph, clique: Clique) -> None:
        super().__init__(fc.graph, clique)
        self.structure: GarsideStructure = fc.structure(self.generators)
        self._position = {g: s for s, g in enumerate(self.generators)}

    @property
    def identity(self) -> Key:
        return ONE

    def multiply_letter(self, key: Key, letter: Letter) -> Key:
        self._check_letter(letter)
        g, e = letter
        return right_multiply_letter(self.structure, key, (self._position[g], e))

    def fraction(self, x: GrpElt) -> tuple[GrpElt, GrpElt]:
        """Positive a, b with x = a⁻¹b and a ∧ b = 1."""
        gs = self.structure
        if x.power >= 0:
            return ONE, x
        top = GrpElt(-x.power, ())
        tail = GrpElt(0, x.tail)
        g = meet_p(gs, top, tail)
        return multiply(gs, inverse(gs, g), top), multiply(gs, inverse(gs, g), tail)

    def _positive_word(self, x: GrpElt) -> list[Letter]:
        return [(self.generators[p], e) for p, e in garside_word(self.structure, x)]

    def to_word(self, key: Key) -> list[Letter]:
        a, b = self.fraction(key)
        return inverse_word(self._positive_word(a)) + self._positive_word(b)

    def in_parabolic(self, key: Key, subset: Iterable[int]) -> bool:
        allowed = set(subset)
        return all(g in allowed for g, _ in self.to_word(key))


class RightAngledOracle(WordOracle):
    """Free reduction past commuting letters, then the lexicographic trace normal form."""

    kind = OracleKind.RIGHT_ANGLED

    def __init__(self, graph: DefiningGraph, generators: Iterable[int] | None = None) -> None:
        super().__init__(graph, range(graph.rank) if generators is None else generators)
        if not all(
            graph.label(i, j) in (2, None)
            for i in self.generators
            for j in self.generators
            if i != j
        ):
            raise OracleUnsupported("right-angled forms need every label to be 2")

    @property
    def identity(self) -> Key:
        return ()

    def _commute(self, g: int, h: int) -> bool:
        return g != h and self.graph.commute(g, h)

    @staticmethod
    def _order(letter: Letter) -> tuple[int, int]:
        return (letter[0], 0 if letter[1] > 0 else 1)

    def _lex_normal(self, word: list[Letter]) -> tuple[Letter, ...]:
        remaining = list(word)
        result: list[Letter] = []
        while remaining:
            best = -1
            for i, letter in enumerate(remaining):
                if all(self._commute(letter[0], earlier[0]) for earlier in remaining[:i]):
                    if best < 0 or self._order(letter) < self._order(remaining[best]):
                        best = i
            result.append(remaining.pop(best))
        return tuple(result)

    def multiply_letter(self, key: Key, letter: Letter) -> Key:
        self._check_letter(letter)
        word = list(key)
        g, e = letter
        for j in range(len(word) - 1, -1, -1):
            h, f = word[j]
            if h == g:
                if f == -e:
                    del word[j]
                    return self._lex_normal(word)
                break
            if not self._commute(g, h):
                break
        word.append(letter)
        return self._lex_normal(word)

    def to_word(self, key: Key) -> list[Letter]:
        return list(key)

    def in_parabolic(self, key: Key, subset: Iterable[int]) -> bool:
        allowed = set(subset)
        return all(g in allowed for g, _ in key)


def choose_oracle(fc: FCGraph, kind: OracleKind | None = None) -> WordOracle:
    """Right-angled before spherical before tree-of-cliques amalgam, unless forced."""
    from .amalgam import AmalgamOracle

    graph = fc.graph
    every = tuple(range(graph.rank))
    right_angled = graph.is_right_angled()
    spherical = graph.is_complete(every)
    if kind is None:
        if right_angled:
            return RightAngledOracle(graph)
        if spherical:
            return SphericalOracle(fc, every)
        kind = OracleKind.AMALGAM
    if kind == OracleKind.RIGHT_ANGLED:
        if not right_angled:
            raise OracleUnsupported("right-angled oracle needs every label to be 2")
        return RightAngledOracle(graph)
    if kind == OracleKind.SPHERICAL:
        if not spherical:
            raise OracleUnsupported("spherical oracle needs a complete defining graph")
        return SphericalOracle(fc, every)
    if kind == OracleKind.AMALGAM:
        if spherical:
            return SphericalOracle(fc, every)
        return AmalgamOracle(fc, every)
    raise OracleUnsupported(f"no oracle of kind {kind.value} for this graph")
