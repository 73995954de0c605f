from collections.abc import Hashable, Iterable
from pathlib import Path
from typing import Protocol

import networkx as nx

from ..errors import InputError


class NeighborSource(Protocol):
    def neighbors(self, v: Hashable) -> Iterable[Hashable]: ...


class SimpleGraph:
    """Undirected graph without loops or multi-edges, backed by networkx."""

    def __init__(self, graph: nx.Graph | None = None) -> None:
        self._graph = nx.Graph() if graph is None else nx.Graph(graph)
        if nx.number_of_selfloops(self._graph):
            raise InputError("simple graphs have no loops")

    @property
    def graph(self) -> nx.Graph:
        return self._graph

    @property
    def vertices(self) -> list[Hashable]:
        return list(self._graph.nodes)

    @property
    def edges(self) -> list[tuple[Hashable, Hashable]]:
        return list(self._graph.edges)

    def add_vertex(self, v: Hashable) -> None:
        self._graph.add_node(v)

    def add_edge(self, u: Hashable, v: Hashable) -> None:
        if u == v:
            raise InputError(f"loop at {u}")
        self._graph.add_edge(u, v)

    def adjacent(self, u: Hashable, v: Hashable) -> bool:
        return bool(self._graph.has_edge(u, v))

    def neighbors(self, v: Hashable) -> set[Hashable]:
        return set(self._graph.neighbors(v))

    def induced_subgraph(self, vertices: Iterable[Hashable]) -> "SimpleGraph":
        return SimpleGraph(self._graph.subgraph(vertices))

    def ball(self, v: Hashable, radius: int) -> frozenset[Hashable]:
        return ball_of(self, v, radius)

    @classmethod
    def from_edge_list(cls, text: str) -> "SimpleGraph":
        """One edge per line as two whitespace-separated names; a lone name is a vertex."""
        graph = cls()
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            tokens = line.split()
            if len(tokens) == 1:
                graph.add_vertex(tokens[0])
            elif len(tokens) == 2:
                try:
                    graph.add_edge(tokens[0], tokens[1])
                except InputError as e:
                    raise InputError(f"line {number}: {e.message}") from e
            else:
                raise InputError(f"line {number}: expected one or two names, got {len(tokens)}")
        return graph

    def to_edge_list(self) -> str:
        isolated = [str(v) for v in self._graph.nodes if self._graph.degree(v) == 0]
        lines = [f"{u} {v}" for u, v in self._graph.edges] + isolated
        return "\n".join(lines) + "\n"

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines.extend(f'  "{v}"' for v in self._graph.nodes)
        lines.extend(f'  "{u}" -- "{v}"' for u, v in self._graph.edges)
        lines.append("}")
        return "\n".join(lines) + "\n"


def load_edge_list(path: Path | str) -> SimpleGraph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read edge list {path}: {e}") from e
    return SimpleGraph.from_edge_list(text)


def ball_of(source: NeighborSource, v: Hashable, radius: int) -> frozenset[Hashable]:
    seen = {v}
    frontier = [v]
    for _ in range(radius):
        following = []
        for u in frontier:
            for w in source.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    following.append(w)
        frontier = following
    return frozenset(seen)


def cycle(n: int) -> SimpleGraph:
    return SimpleGraph(nx.cycle_graph(n))


def complete(n: int) -> SimpleGraph:
    return SimpleGraph(nx.complete_graph(n))


def path(n: int) -> SimpleGraph:
    return SimpleGraph(nx.path_graph(n))


def octahedron() -> SimpleGraph:
    return SimpleGraph(nx.octahedral_graph())
