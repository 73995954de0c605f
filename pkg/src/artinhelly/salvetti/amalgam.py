from collections import defaultdict
from collections.abc import Iterable
from dataclasses import dataclass
from threading import Lock

import networkx as nx
from loguru import logger

from ..coxeter.graph import Clique
from ..coxeter.group import TitsRepresentation
from ..errors import OracleUnsupported
from ..formats.models import OracleKind
from .fc import FCGraph
from .oracles import Key, Letter, SphericalOracle, TrivialOracle, WordOracle, inverse_word


@dataclass(frozen=True)
class Peel:
    leaf: Clique
    rest: tuple[int, ...]
    separator: Clique


def maximal_cliques_on(fc: FCGraph, vertices: Iterable[int]) -> list[Clique]:
    induced = fc.graph.to_networkx().subgraph(list(vertices))
    return sorted(tuple(sorted(c)) for c in nx.find_cliques(induced))


def peel_leaf_clique(fc: FCGraph, vertices: Iterable[int]) -> Peel:
    """Split off the first maximal clique whose shared part sits inside another clique."""
    vertices = tuple(sorted(vertices))
    cliques = maximal_cliques_on(fc, vertices)
    for leaf in cliques:
        others = [c for c in cliques if c != leaf]
        private = set(leaf) - set().union(*others)
        if not private:
            continue
        separator = tuple(sorted(set(leaf) - private))
        if separator and not any(set(separator) <= set(c) for c in others):
            continue
        rest = tuple(v for v in vertices if v not in private)
        return Peel(leaf=leaf, rest=rest, separator=separator)
    raise OracleUnsupported(
        f"maximal-clique nerve of {{{', '.join(fc.graph.names(vertices))}}} is not a tree"
    )


class _Transversal:
    """Left transversal of the separator subgroup in one factor, registered on first sight.

    Candidates are bucketed by the minimal coset representative of their
    Coxeter image, so only elements with the same image coset are compared.
    """

    def __init__(
        self,
        factor: WordOracle,
        separator_oracle: WordOracle,
        separator: Clique,
        tits: TitsRepresentation,
    ) -> None:
        self.factor = factor
        self.separator_oracle = separator_oracle
        self.separator = separator
        self.tits = tits
        self._buckets: dict[bytes, list[tuple[Key, list[Letter]]]] = defaultdict(list)
        self._lock = Lock()

    @property
    def size(self) -> int:
        return sum(len(b) for b in self._buckets.values())

    def _bucket(self, word: list[Letter]) -> bytes:
        matrix = self.tits.matrix(g for g, _ in word)
        return self.tits.key(self.tits.coset_minimal(matrix, self.separator))

    def split(self, y: Key) -> tuple[Key, Key]:
        """y = t·c with t the registered coset representative and c a separator key."""
        word = self.factor.to_word(y)
        if self.factor.in_parabolic(y, self.separator):
            return self.factor.identity, self.separator_oracle.canonical(
                self.factor.word_in(y, self.separator)
            )
        bucket = self._bucket(word)
        with self._lock:
            for t, t_inverse in self._buckets[bucket]:
                c = self.factor.canonical(t_inverse + word)
                if self.factor.in_parabolic(c, self.separator):
                    return t, self.separator_oracle.canonical(
                        self.factor.word_in(c, self.separator)
                    )
            self._buckets[bucket].append((y, inverse_word(word)))
        return y, self.separator_oracle.identity


class AmalgamOracle(WordOracle):
    """Normal forms t₁⋯t_k·c for an amalgamated product over a leaf clique of the clique tree."""

    kind = OracleKind.AMALGAM

    def __init__(
        self, fc: FCGraph, vertices: Iterable[int], tits: TitsRepresentation | None = None
    ) -> None:
        super().__init__(fc.graph, vertices)
        self.peel = peel_leaf_clique(fc, self.generators)
        self.tits = tits if tits is not None else TitsRepresentation(fc.graph)
        leaf_side = SphericalOracle(fc, self.peel.leaf)
        rest = self.peel.rest
        rest_side: WordOracle
        if fc.graph.is_complete(rest):
            rest_side = SphericalOracle(fc, rest)
        else:
            rest_side = AmalgamOracle(fc, rest, self.tits)
        self.separator_oracle: WordOracle = (
            SphericalOracle(fc, self.peel.separator)
            if self.peel.separator
            else TrivialOracle(fc.graph)
        )
        self.sides: tuple[WordOracle, WordOracle] = (leaf_side, rest_side)
        self.transversals = tuple(
            _Transversal(side, self.separator_oracle, self.peel.separator, self.tits)
            for side in self.sides
        )
        self._separator_set = set(self.peel.separator)
        self._leaf_set = set(self.peel.leaf)
        logger.debug(
            f"Amalgam over {fc.graph.names(self.peel.separator)}: leaf "
            f"{fc.graph.names(self.peel.leaf)}, rest {fc.graph.names(rest)}"
        )

    @property
    def identity(self) -> Key:
        return ((), self.separator_oracle.identity)

    def multiply_letter(self, key: Key, letter: Letter) -> Key:
        self._check_letter(letter)
        factors, c = key
        g, _ = letter
        if g in self._separator_set:
            return (factors, self.separator_oracle.multiply_letter(c, letter))
        tag = 0 if g in self._leaf_set else 1
        side = self.sides[tag]
        if factors and factors[-1][0] == tag:
            start, prefix = factors[-1][1], factors[:-1]
        else:
            start, prefix = side.identity, factors
        y = side.multiply_word(start, self.separator_oracle.to_word(c) + [letter])
        t, c = self.transversals[tag].split(y)
        if t == side.identity:
            return (prefix, c)
        return (prefix + ((tag, t),), c)

    def to_word(self, key: Key) -> list[Letter]:
        factors, c = key
        word: list[Letter] = []
        for tag, t in factors:
            word.extend(self.sides[tag].to_word(t))
        word.extend(self.separator_oracle.to_word(c))
        return word

    def in_parabolic(self, key: Key, subset: Iterable[int]) -> bool:
        # a clique lies on one side, so reduced forms of length two or more are outside
        factors, c = key
        allowed = set(subset)
        if not factors:
            return self.separator_oracle.in_parabolic(c, allowed)
        if len(factors) == 1:
            tag, t = factors[0]
            side = self.sides[tag]
            z = side.multiply_word(t, self.separator_oracle.to_word(c))
            return side.in_parabolic(z, allowed)
        return False

    def word_in(self, key: Key, subset: Iterable[int]) -> list[Letter]:
        factors, c = key
        if not factors:
            return self.separator_oracle.word_in(c, subset)
        if len(factors) == 1:
            tag, t = factors[0]
            side = self.sides[tag]
            return side.word_in(side.multiply_word(t, self.separator_oracle.to_word(c)), subset)
        return super().word_in(key, subset)

    @property
    def registered(self) -> int:
        return sum(t.size for t in self.transversals)
