import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np
from loguru import logger

from ..config.settings import settings
from ..errors import InputError, NotFiniteWithinCap, StructureViolation
from .graph import DefiningGraph


@dataclass(frozen=True)
class CoxElt:
    index: int
    shortlex_word: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.shortlex_word)


class TitsRepresentation:
    """Reflection representation on the root space; works for infinite W as well."""

    def __init__(
        self,
        graph: DefiningGraph,
        tolerance: float | None = None,
        decimals: int | None = None,
    ) -> None:
        self.graph = graph
        self.tolerance = tolerance if tolerance is not None else settings.root_tolerance
        self.decimals = decimals if decimals is not None else settings.matrix_decimals
        n = graph.rank
        self.form = np.empty((n, n))
        for i in range(n):
            for j in range(n):
                m = graph.label(i, j)
                self.form[i, j] = -1.0 if m is None else -math.cos(math.pi / m)
        identity = np.eye(n)
        self.reflections = [
            identity - 2.0 * np.outer(identity[i], self.form[i]) for i in range(n)
        ]

    def matrix(self, word: Iterable[int]) -> np.ndarray:
        result = np.eye(self.graph.rank)
        for s in word:
            result = result @ self.reflections[s]
        return result

    def key(self, matrix: np.ndarray) -> bytes:
        return (np.round(matrix, self.decimals) + 0.0).tobytes()

    def is_right_descent(self, matrix: np.ndarray, s: int) -> bool:
        # w(alpha_s) is a root, so the sign of its coordinate sum decides.
        return bool(matrix[:, s].sum() < -self.tolerance)

    def coset_minimal(self, matrix: np.ndarray, subset: Iterable[int]) -> np.ndarray:
        generators = sorted(subset)
        changed = True
        while changed:
            changed = False
            for s in generators:
                if self.is_right_descent(matrix, s):
                    matrix = matrix @ self.reflections[s]
                    changed = True
                    break
        return matrix

    def is_positive_definite(self) -> bool:
        if self.graph.rank == 0:
            return True
        return bool(np.linalg.eigvalsh(self.form).min() > self.tolerance)


class CoxeterGroup:
    def __init__(
        self,
        graph: DefiningGraph,
        words: list[tuple[int, ...]],
        parent: np.ndarray,
        last: np.ndarray,
        right_gen: np.ndarray,
        tits: TitsRepresentation,
    ) -> None:
        self.graph = graph
        self.tits = tits
        self.words = words
        self.parent = parent
        self.last = last
        self.right_gen = right_gen
        self.length = np.array([len(w) for w in words], dtype=np.int32)
        self.mul_table = self._build_mul_table()
        self.inverse = self._build_inverse()
        self.generators = [int(right_gen[0, s]) for s in range(graph.rank)]
        self.right_descents = [
            frozenset(
                s
                for s in range(graph.rank)
                if self.length[right_gen[w, s]] < self.length[w]
            )
            for w in range(self.order)
        ]
        self.left_descents = [
            frozenset(
                s
                for s in range(graph.rank)
                if self.length[self.mul_table[self.generators[s], w]] < self.length[w]
            )
            for w in range(self.order)
        ]
        self._cache: dict[str, np.ndarray] = {}

    @property
    def order(self) -> int:
        return len(self.words)

    @property
    def rank(self) -> int:
        return self.graph.rank

    @property
    def identity(self) -> int:
        return 0

    def _build_mul_table(self) -> np.ndarray:
        n = self.order
        table = np.empty((n, n), dtype=np.int32)
        table[:, 0] = np.arange(n, dtype=np.int32)
        for v in range(1, n):
            table[:, v] = self.right_gen[table[:, self.parent[v]], self.last[v]]
        return table

    def _build_inverse(self) -> np.ndarray:
        inverse = np.zeros(self.order, dtype=np.int32)
        for v in range(1, self.order):
            generator = int(self.right_gen[0, self.last[v]])
            inverse[v] = self.mul_table[generator, inverse[self.parent[v]]]
        return inverse

    def element(self, index: int) -> CoxElt:
        return CoxElt(index=int(index), shortlex_word=self.words[int(index)])

    def mul(self, u: int, v: int) -> int:
        return int(self.mul_table[u, v])

    def from_word(self, word: Iterable[int]) -> int:
        w = 0
        for s in word:
            if not 0 <= s < self.rank:
                raise InputError(f"generator index {s} outside rank {self.rank}")
            w = int(self.right_gen[w, s])
        return w

    def parse(self, text: str) -> CoxElt:
        tokens = text.replace("·", " ").split()
        if tokens in ([], ["e"], ["1"]):
            return self.element(0)
        return self.element(self.from_word(self.graph.index(t) for t in tokens))

    def word_names(self, element: CoxElt | int) -> tuple[str, ...]:
        index = element.index if isinstance(element, CoxElt) else element
        return tuple(self.graph.vertices[s] for s in self.words[index])

    def render(self, element: CoxElt | int) -> str:
        names = self.word_names(element)
        if not names:
            return "e"
        separator = "" if all(len(v) == 1 for v in self.graph.vertices) else "·"
        return separator.join(names)

    def cached(self, key: str) -> np.ndarray | None:
        return self._cache.get(key)

    def store(self, key: str, value: np.ndarray) -> np.ndarray:
        self._cache[key] = value
        return value


def enumerate_group(graph: DefiningGraph, cap: int | None = None) -> CoxeterGroup:
    cap = cap if cap is not None else settings.enumeration_cap
    if cap < 1:
        raise InputError("enumeration cap must be at least 1")
    tits = TitsRepresentation(graph)
    n = graph.rank
    matrices = [np.eye(n)]
    seen = {tits.key(matrices[0]): 0}
    words: list[tuple[int, ...]] = [()]
    parent = [-1]
    last = [-1]
    right_gen: list[list[int]] = []
    head = 0
    while head < len(matrices):
        row = []
        for s in range(n):
            product = matrices[head] @ tits.reflections[s]
            key = tits.key(product)
            j = seen.get(key)
            if j is None:
                j = len(matrices)
                if j >= cap:
                    logger.debug(f"Enumeration of {graph.vertices} passed cap {cap}")
                    raise NotFiniteWithinCap(cap)
                seen[key] = j
                matrices.append(product)
                words.append(words[head] + (s,))
                parent.append(head)
                last.append(s)
            row.append(j)
        for s in range(n):
            descent = len(words[row[s]]) < len(words[head])
            if descent != tits.is_right_descent(matrices[head], s):
                raise StructureViolation(
                    "root-sign descent", f"element {words[head]} generator {s}"
                )
        right_gen.append(row)
        head += 1
    group = CoxeterGroup(
        graph,
        words,
        np.array(parent, dtype=np.int32),
        np.array(last, dtype=np.int32),
        np.array(right_gen, dtype=np.int32).reshape(len(words), n),
        tits,
    )
    check_group_axioms(group)
    logger.debug(f"Enumerated W({', '.join(graph.vertices)}) with {group.order} elements")
    return group


def check_group_axioms(
    group: CoxeterGroup, samples: int | None = None, seed: int | None = None
) -> None:
    table = group.mul_table
    n = group.order
    if not np.array_equal(table[0], np.arange(n)):
        raise StructureViolation("identity", "left identity row")
    if not np.all(table[np.arange(n), group.inverse] == 0):
        raise StructureViolation("inverses", "w * w^-1 != e")
    for s, g in enumerate(group.generators):
        if table[g, g] != 0:
            raise StructureViolation("involution", f"generator {s} does not square to e")
    steps = group.length[group.right_gen] - group.length[:, None]
    if not np.all(np.abs(steps) == 1):
        raise StructureViolation("length parity", "l(ws) != l(w) +- 1")
    rng = np.random.default_rng(seed if seed is not None else settings.seed)
    count = samples if samples is not None else settings.associativity_samples
    triples = rng.integers(0, n, size=(count, 3))
    for u, v, w in triples:
        if table[table[u, v], w] != table[u, table[v, w]]:
            raise StructureViolation("associativity", f"({u}, {v}, {w})")
        if group.length[table[u, v]] > group.length[u] + group.length[v]:
            raise StructureViolation("subadditivity", f"({u}, {v})")


def longest_element(group: CoxeterGroup) -> CoxElt:
    top = int(np.argmax(group.length))
    if np.count_nonzero(group.length == group.length[top]) != 1:
        raise StructureViolation("unique longest element")
    return group.element(top)


def cayley_distance(group: CoxeterGroup, u: CoxElt, v: CoxElt) -> int:
    return int(group.length[group.mul_table[group.inverse[u.index], v.index]])


def embed_word(word: Sequence[int], positions: Sequence[int]) -> tuple[int, ...]:
    """Translate a word over a subgraph's local generators to the ambient indices."""
    return tuple(positions[s] for s in word)
