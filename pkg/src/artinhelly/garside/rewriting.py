from collections import deque
from collections.abc import Iterable
from itertools import product

from loguru import logger

from ..config.settings import settings
from ..coxeter.graph import DefiningGraph
from ..errors import CapExceeded

Word = tuple[int, ...]


def _alternating(s: int, t: int, m: int) -> Word:
    return tuple(s if k % 2 == 0 else t for k in range(m))


class PositiveWordOracle:
    """Equality of positive Artin words by closure under braid relation moves.

    The relations preserve length, so the class of a word is finite and two
    positive words are equal in the monoid iff their classes coincide.
    """

    def __init__(self, graph: DefiningGraph, cap: int | None = None) -> None:
        self.graph = graph
        self.cap = cap if cap is not None else settings.closure_cap
        self.relations: list[tuple[Word, Word]] = []
        for s, t, m in graph.edges:
            i, j = graph.index(s), graph.index(t)
            left, right = _alternating(i, j, m), _alternating(j, i, m)
            self.relations.append((left, right))
            self.relations.append((right, left))
        self._classes: dict[Word, frozenset[Word]] = {}

    def _moves(self, word: Word) -> Iterable[Word]:
        for left, right in self.relations:
            m = len(left)
            for k in range(len(word) - m + 1):
                if word[k : k + m] == left:
                    yield word[:k] + right + word[k + m :]

    def equivalence_class(self, word: Iterable[int]) -> frozenset[Word]:
        start = tuple(word)
        known = self._classes.get(start)
        if known is not None:
            return known
        seen = {start}
        queue = deque([start])
        while queue:
            current = queue.popleft()
            for moved in self._moves(current):
                if moved not in seen:
                    seen.add(moved)
                    if len(seen) > self.cap:
                        raise CapExceeded(
                            f"relation-move closure of a length {len(start)} word "
                            f"passed {self.cap} words"
                        )
                    queue.append(moved)
        found = frozenset(seen)
        for member in found:
            self._classes[member] = found
        return found

    def canonical(self, word: Iterable[int]) -> Word:
        return min(self.equivalence_class(word))

    def equal(self, first: Iterable[int], second: Iterable[int]) -> bool:
        first, second = tuple(first), tuple(second)
        if len(first) != len(second):
            return False
        return second in self.equivalence_class(first)

    def classes_of_length(self, length: int) -> dict[Word, frozenset[Word]]:
        """Partition of all positive words of a given length into classes."""
        partition: dict[Word, frozenset[Word]] = {}
        for word in product(range(self.graph.rank), repeat=length):
            if word in self._classes and min(self._classes[word]) in partition:
                continue
            found = self.equivalence_class(word)
            partition[min(found)] = found
        logger.debug(f"{len(partition)} positive classes of length {length}")
        return partition
