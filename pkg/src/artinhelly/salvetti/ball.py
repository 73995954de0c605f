from collections.abc import Iterator, Sequence

import networkx as nx
import numpy as np
from loguru import logger

from ..errors import InputError, StructureViolation
from ..hellygraph.graph import SimpleGraph
from .fc import FCGraph
from .oracles import Key, Letter, WordOracle

OUTSIDE = -1


def letter_column(letter: Letter) -> int:
    g, e = letter
    return 2 * g + (0 if e > 0 else 1)


class CayleyBall:
    """The metric ball of radius ``radius`` about 1 in the Cayley graph of A_Γ.

    Vertices are indexed in BFS order; ``step[i, letter_column(l)]`` is the
    index of ``vertex_i · l`` or ``OUTSIDE`` when that product leaves the ball.
    """

    def __init__(
        self,
        oracle: WordOracle,
        radius: int,
        keys: list[Key],
        distance: np.ndarray,
        words: list[list[Letter]],
        step: np.ndarray,
    ) -> None:
        self.oracle = oracle
        self.radius = radius
        self.keys = keys
        self.index: dict[Key, int] = {k: i for i, k in enumerate(keys)}
        self.distance = distance
        self.words = words
        self.step = step

    def __len__(self) -> int:
        return len(self.keys)

    def __contains__(self, key: Key) -> bool:
        return key in self.index

    @property
    def rank(self) -> int:
        return self.step.shape[1] // 2

    def neighbors(self, i: int) -> set[int]:
        return {int(j) for j in self.step[i] if j != OUTSIDE}

    def walk(self, i: int, word: Sequence[Letter]) -> int:
        """Follow ``word`` from vertex i; ``OUTSIDE`` as soon as it leaves the ball."""
        for letter in word:
            i = int(self.step[i, letter_column(letter)])
            if i == OUTSIDE:
                return OUTSIDE
        return i

    def edges(self) -> Iterator[tuple[int, int, int]]:
        """Oriented edges (i, j, g) with j = i·g for a generator g."""
        for i in range(len(self)):
            for g in range(self.rank):
                j = int(self.step[i, 2 * g])
                if j != OUTSIDE:
                    yield i, j, g

    def within(self, radius: int) -> list[int]:
        return [int(i) for i in np.flatnonzero(self.distance <= radius)]

    def render(self, i: int) -> str:
        word = self.words[i]
        if not word:
            return "1"
        names = self.oracle.graph.vertices
        return " ".join(names[g] if e > 0 else f"{names[g]}^-1" for g, e in word)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(len(self)))
        graph.add_edges_from((i, j) for i, j, _ in self.edges())
        return graph

    def to_simple_graph(self) -> SimpleGraph:
        return SimpleGraph(self.to_networkx())


def build_ball(fc: FCGraph, radius: int, oracle: WordOracle) -> CayleyBall:
    """Breadth-first ball about the identity, certified against the oracle."""
    if radius < 0:
        raise InputError(f"radius must be non-negative, got {radius}")
    rank = fc.rank
    letters: list[Letter] = [(g, e) for g in range(rank) for e in (1, -1)]
    keys: list[Key] = [oracle.identity]
    index: dict[Key, int] = {oracle.identity: 0}
    distance: list[int] = [0]
    words: list[list[Letter]] = [[]]
    rows: list[list[int]] = []
    head = 0
    while head < len(keys):
        row = []
        for letter in letters:
            key = oracle.multiply_letter(keys[head], letter)
            j = index.get(key)
            if j is None and distance[head] < radius:
                j = len(keys)
                index[key] = j
                keys.append(key)
                distance.append(distance[head] + 1)
                words.append(words[head] + [letter])
            row.append(OUTSIDE if j is None else j)
        rows.append(row)
        head += 1
    ball = CayleyBall(
        oracle,
        radius,
        keys,
        np.array(distance, dtype=np.int32),
        words,
        np.array(rows, dtype=np.int64).reshape(len(keys), 2 * rank),
    )
    certify_ball(ball)
    logger.info(f"Ball of radius {radius}: {len(ball)} vertices ({oracle.kind.value} oracle)")
    return ball


def certify_ball(ball: CayleyBall) -> None:
    oracle = ball.oracle
    for i, key in enumerate(ball.keys):
        if oracle.canonical(oracle.to_word(key)) != key:
            raise StructureViolation("canonical form idempotence", ball.render(i))
        if oracle.canonical(ball.words[i]) != key:
            raise StructureViolation("BFS word spells its vertex", ball.render(i))
        if len(ball.words[i]) != ball.distance[i]:
            raise StructureViolation("BFS distance", ball.render(i))
        for column, j in enumerate(ball.step[i]):
            if j == OUTSIDE:
                continue
            back = ball.step[j, column ^ 1]
            if back != i or abs(int(ball.distance[j]) - int(ball.distance[i])) > 1:
                raise StructureViolation("Cayley graph symmetry", ball.render(i))
