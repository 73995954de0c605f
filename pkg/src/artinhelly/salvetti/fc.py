from loguru import logger

from ..config.settings import settings
from ..coxeter.graph import Clique, DefiningGraph
from ..coxeter.group import CoxeterGroup, TitsRepresentation, enumerate_group, longest_element
from ..errors import CapExceeded, InputError, NotFC, NotFiniteWithinCap
from ..garside.structure import GarsideStructure, garside_from_spherical


class FCGraph:
    """A defining graph whose complete subgraphs are all spherical.

    Every clique (the empty one included) carries its enumerated Coxeter group
    and Garside structure; local generator s of a clique is ``clique[s]``.
    """

    def __init__(self, graph: DefiningGraph, groups: dict[Clique, CoxeterGroup]) -> None:
        self.graph = graph
        self.cliques: list[Clique] = graph.cliques()
        self.maximal_cliques: list[Clique] = graph.maximal_cliques()
        self._groups = groups
        self._structures: dict[Clique, GarsideStructure] = {}

    @property
    def rank(self) -> int:
        return self.graph.rank

    def group(self, clique: Clique) -> CoxeterGroup:
        key = tuple(sorted(clique))
        if key not in self._groups:
            raise InputError(f"{self.graph.names(key)} is not a clique of the defining graph")
        return self._groups[key]

    def structure(self, clique: Clique) -> GarsideStructure:
        key = tuple(sorted(clique))
        if key not in self._structures:
            self._structures[key] = garside_from_spherical(self.group(key))
        return self._structures[key]

    def delta_length(self, clique: Clique) -> int:
        return int(self.group(clique).length.max())

    @property
    def max_delta_length(self) -> int:
        return max(self.delta_length(c) for c in self.maximal_cliques)

    def is_maximal(self, clique: Clique) -> bool:
        return tuple(sorted(clique)) in self.maximal_cliques

    def maximal_clique_containing(self, subset: Clique) -> Clique:
        """The lexicographically first maximal clique containing ``subset``."""
        for clique in self.maximal_cliques:
            if set(subset) <= set(clique):
                return clique
        raise NotFC(self.graph.names(subset))


def certify_fc(graph: DefiningGraph, cap: int | None = None) -> FCGraph:
    cap = cap if cap is not None else settings.enumeration_cap
    groups: dict[Clique, CoxeterGroup] = {}
    for clique in graph.maximal_cliques():
        subgraph = graph.full_subgraph(clique)
        try:
            groups[clique] = enumerate_group(subgraph, cap)
        except NotFiniteWithinCap as e:
            if TitsRepresentation(subgraph).is_positive_definite():
                raise CapExceeded(
                    f"clique {{{', '.join(subgraph.vertices)}}} is spherical but larger "
                    f"than cap={cap}"
                ) from e
            raise NotFC(subgraph.vertices) from e
    for clique in graph.cliques():
        if clique not in groups:
            groups[clique] = enumerate_group(graph.full_subgraph(clique), cap)
    fc = FCGraph(graph, groups)
    logger.info(
        f"Certified FC: {len(fc.maximal_cliques)} maximal cliques, "
        f"largest Garside element of length {fc.max_delta_length}"
    )
    return fc
