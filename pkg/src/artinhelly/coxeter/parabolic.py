from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from itertools import combinations

import networkx as nx
import numpy as np

from ..errors import StructureViolation
from .group import CoxElt, CoxeterGroup


@dataclass(frozen=True)
class ParabolicCoset:
    generators: frozenset[int]
    representative: CoxElt
    members: frozenset[int] = field(compare=False)

    def __contains__(self, element: int) -> bool:
        return element in self.members


@dataclass
class CosetHellyResult:
    cosets: int
    families_tested: int
    violations: list[list[ParabolicCoset]]


def subgroup_members(group: CoxeterGroup, generators: Iterable[int]) -> frozenset[int]:
    gens = sorted(set(generators))
    seen = {0}
    frontier = [0]
    while frontier:
        following = []
        for w in frontier:
            for s in gens:
                ws = int(group.right_gen[w, s])
                if ws not in seen:
                    seen.add(ws)
                    following.append(ws)
        frontier = following
    return frozenset(seen)


def minimal_coset_representative(
    group: CoxeterGroup, w: int, generators: Iterable[int]
) -> int:
    gens = sorted(set(generators))
    while True:
        descents = [s for s in gens if s in group.right_descents[w]]
        if not descents:
            return w
        w = int(group.right_gen[w, descents[0]])


def coset(group: CoxeterGroup, w: CoxElt | int, generators: Iterable[int]) -> ParabolicCoset:
    index = w.index if isinstance(w, CoxElt) else int(w)
    gens = frozenset(generators)
    subgroup = subgroup_members(group, gens)
    members = frozenset(int(group.mul_table[index, p]) for p in subgroup)
    shortest = min(group.length[m] for m in members)
    minimal = [m for m in members if group.length[m] == shortest]
    representative = minimal_coset_representative(group, index, gens)
    if len(minimal) != 1 or minimal[0] != representative:
        raise StructureViolation(
            "unique minimal coset representative", f"coset of {index} by {sorted(gens)}"
        )
    return ParabolicCoset(
        generators=gens, representative=group.element(representative), members=members
    )


def parabolic_subgroup(group: CoxeterGroup, generators: Iterable[int]) -> ParabolicCoset:
    return coset(group, 0, generators)


def all_cosets(group: CoxeterGroup) -> list[ParabolicCoset]:
    found: list[ParabolicCoset] = []
    for size in range(group.rank + 1):
        for gens in combinations(range(group.rank), size):
            representatives = sorted(
                {minimal_coset_representative(group, w, gens) for w in range(group.order)}
            )
            found.extend(coset(group, r, gens) for r in representatives)
    return found


def gate(group: CoxeterGroup, v: CoxElt, target: ParabolicCoset) -> CoxElt:
    members = np.array(sorted(target.members))
    distances = group.length[group.mul_table[group.inverse[v.index], members]]
    nearest = members[distances == distances.min()]
    if nearest.size != 1:
        raise StructureViolation("unique gate", f"{nearest.size} nearest points")
    u = int(nearest[0])
    d_vu = int(distances.min())
    through = group.length[group.mul_table[group.inverse[u], members]]
    if not np.array_equal(distances, d_vu + through):
        raise StructureViolation("gate identity", f"vertex {v.index}, gate {u}")
    return group.element(u)


def coset_family_intersection(
    group: CoxeterGroup, family: Sequence[ParabolicCoset]
) -> frozenset[int]:
    if not family:
        return frozenset(range(group.order))
    result = family[0].members
    for other in family[1:]:
        result = result & other.members
    return result


def check_coset_helly(group: CoxeterGroup) -> CosetHellyResult:
    """Every pairwise-intersecting coset family meets; checked on maximal families."""
    cosets = all_cosets(group)
    graph = nx.Graph()
    graph.add_nodes_from(range(len(cosets)))
    for i, j in combinations(range(len(cosets)), 2):
        if cosets[i].members & cosets[j].members:
            graph.add_edge(i, j)
    violations: list[list[ParabolicCoset]] = []
    tested = 0
    for clique in nx.find_cliques(graph):
        tested += 1
        family = [cosets[i] for i in sorted(clique)]
        if not coset_family_intersection(group, family):
            violations.append(family)
    return CosetHellyResult(cosets=len(cosets), families_tested=tested, violations=violations)
