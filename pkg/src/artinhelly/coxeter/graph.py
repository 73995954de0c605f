import json
from itertools import combinations
from pathlib import Path
from typing import Any

import networkx as nx
import numpy as np
from pydantic import BaseModel, ConfigDict, PrivateAttr, ValidationError, model_validator

from ..errors import InputError

Clique = tuple[int, ...]


class DefiningGraph(BaseModel):
    """Labeled simple graph of a Coxeter/Artin system; a missing edge means m = ∞."""

    model_config = ConfigDict(frozen=True)

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, int], ...] = ()

    _index: dict[str, int] = PrivateAttr(default_factory=dict)
    _labels: dict[tuple[int, int], int] = PrivateAttr(default_factory=dict)

    @model_validator(mode="after")
    def _check_simple(self) -> "DefiningGraph":
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("vertex names must be unique")
        names = set(self.vertices)
        seen: set[frozenset[str]] = set()
        for s, t, m in self.edges:
            if s not in names or t not in names:
                raise ValueError(f"edge ({s}, {t}) uses an unknown vertex")
            if s == t:
                raise ValueError(f"loop at {s}")
            if m < 2:
                raise ValueError(f"label {m} on ({s}, {t}) is below 2")
            pair = frozenset((s, t))
            if pair in seen:
                raise ValueError(f"multiple edges between {s} and {t}")
            seen.add(pair)
        return self

    def model_post_init(self, __context: Any) -> None:
        self._index = {name: i for i, name in enumerate(self.vertices)}
        for s, t, m in self.edges:
            i, j = self._index[s], self._index[t]
            self._labels[(i, j)] = m
            self._labels[(j, i)] = m

    @property
    def rank(self) -> int:
        return len(self.vertices)

    def index(self, name: str) -> int:
        if name not in self._index:
            raise InputError(f"unknown generator '{name}'")
        return self._index[name]

    def label(self, i: int, j: int) -> int | None:
        if i == j:
            return 1
        return self._labels.get((i, j))

    def adjacent(self, i: int, j: int) -> bool:
        return i != j and (i, j) in self._labels

    def commute(self, i: int, j: int) -> bool:
        return self.label(i, j) == 2

    def coxeter_matrix(self) -> np.ndarray:
        n = self.rank
        matrix = np.zeros((n, n), dtype=int)
        for i in range(n):
            for j in range(n):
                matrix[i, j] = self.label(i, j) or 0
        return matrix

    def is_complete(self, subset: Clique | None = None) -> bool:
        indices = tuple(range(self.rank)) if subset is None else subset
        return all(self.adjacent(i, j) for i, j in combinations(indices, 2))

    def is_right_angled(self) -> bool:
        return all(m == 2 for _, _, m in self.edges)

    def full_subgraph(self, subset: Clique) -> "DefiningGraph":
        ordered = sorted(subset)
        names = tuple(self.vertices[i] for i in ordered)
        edges = tuple(
            (self.vertices[i], self.vertices[j], self._labels[(i, j)])
            for i, j in combinations(ordered, 2)
            if (i, j) in self._labels
        )
        return DefiningGraph(vertices=names, edges=edges)

    def names(self, subset: Clique) -> tuple[str, ...]:
        return tuple(self.vertices[i] for i in subset)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.rank))
        for (i, j), m in self._labels.items():
            if i < j:
                graph.add_edge(i, j, label=m)
        return graph

    def cliques(self) -> list[Clique]:
        """Every complete vertex subset, the empty one included, by size then lex."""
        found: list[Clique] = []
        for size in range(self.rank + 1):
            for subset in combinations(range(self.rank), size):
                if self.is_complete(subset):
                    found.append(subset)
        return found

    def maximal_cliques(self) -> list[Clique]:
        if self.rank == 0:
            return [()]
        return sorted(tuple(sorted(c)) for c in nx.find_cliques(self.to_networkx()))

    def to_json(self) -> str:
        return json.dumps(
            {"vertices": list(self.vertices), "edges": [list(e) for e in self.edges]},
            indent=2,
        )


def load_graph(path: Path | str) -> DefiningGraph:
    try:
        graph = DefiningGraph.model_validate_json(Path(path).read_text(encoding="utf-8"))
    except (OSError, ValidationError, ValueError) as e:
        raise InputError(f"cannot read defining graph {path}: {e}") from e
    if graph.rank == 0:
        raise InputError(f"defining graph {path} has no vertices")
    return graph


def graph_from_edges(vertices: list[str], edges: list[tuple[str, str, int]]) -> DefiningGraph:
    return DefiningGraph(vertices=tuple(vertices), edges=tuple(edges))
