from collections.abc import Callable, Hashable, Iterable, Sequence
from itertools import combinations
from threading import Lock
from typing import Generic, TypeVar

from .graph import SimpleGraph

K = TypeVar("K", bound=Hashable)
W = TypeVar("W")


def thickening(vertices: Iterable[Hashable], cells: Iterable[Iterable[Hashable]]) -> SimpleGraph:
    """Two distinct vertices are adjacent iff some cell contains both."""
    graph = SimpleGraph()
    for v in vertices:
        graph.add_vertex(v)
    for cell in cells:
        members = sorted(set(cell), key=repr)
        for u, v in combinations(members, 2):
            graph.add_edge(u, v)
    return graph


class TranslationThickening(Generic[K, W]):
    """Lazy thickening of a group-like vertex set: the neighbors of v are v·o over fixed offsets."""

    def __init__(self, act: Callable[[K, W], K], offsets: Sequence[W]) -> None:
        self._act = act
        self._offsets = list(offsets)
        self._cache: dict[K, frozenset[K]] = {}
        self._lock = Lock()

    @property
    def degree(self) -> int:
        return len(self._offsets)

    def neighbors(self, v: K) -> frozenset[K]:
        with self._lock:
            known = self._cache.get(v)
        if known is not None:
            return known
        found = frozenset(self._act(v, o) for o in self._offsets) - {v}
        with self._lock:
            self._cache[v] = found
        return found
