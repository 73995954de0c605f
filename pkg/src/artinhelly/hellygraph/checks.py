from collections import defaultdict
from collections.abc import Callable, Hashable, Iterable, Iterator, Sequence
from dataclasses import dataclass
from itertools import combinations, islice

import networkx as nx
import numpy as np
from loguru import logger

from ..config.settings import settings
from ..errors import InputError
from ..formats.models import HellyCheckReport
from ..parallel import map_in_order
from .graph import NeighborSource, SimpleGraph, ball_of
from .thickening import thickening

Family = tuple[int, ...]
VertexSet = frozenset[Hashable]


@dataclass
class FamilySweep:
    families: list[Family]
    sampled: bool


def intersection_graph(sets: Sequence[VertexSet]) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(len(sets)))
    owners: dict[Hashable, list[int]] = defaultdict(list)
    for i, members in enumerate(sets):
        for v in members:
            owners[v].append(i)
    for shared in owners.values():
        graph.add_edges_from(combinations(shared, 2))
    return graph


def _cliques_upward(graph: nx.Graph, min_size: int, max_size: int) -> Iterator[Family]:
    def grow(family: Family, candidates: list[int]) -> Iterator[Family]:
        if len(family) >= min_size:
            yield family
        if len(family) == max_size:
            return
        for position, v in enumerate(candidates):
            following = [w for w in candidates[position + 1 :] if graph.has_edge(v, w)]
            yield from grow(family + (v,), following)

    for v in sorted(graph.nodes):
        yield from grow((v,), sorted(w for w in graph.neighbors(v) if w > v))


def sample_families(
    graph: nx.Graph, size: int, count: int, rng: np.random.Generator
) -> list[Family]:
    """Random pairwise-adjacent families grown one member at a time."""
    nodes = sorted(graph.nodes)
    found: dict[Family, None] = {}
    if not nodes:
        return []
    for _ in range(count * 20):
        if len(found) >= count:
            break
        members = [nodes[int(rng.integers(len(nodes)))]]
        candidates = set(graph.neighbors(members[0]))
        while len(members) < size and candidates:
            ordered = sorted(candidates)
            pick = ordered[int(rng.integers(len(ordered)))]
            members.append(pick)
            candidates &= set(graph.neighbors(pick))
            candidates -= set(members)
        if len(members) == size:
            found[tuple(sorted(members))] = None
    return list(found)


def sweep_families(
    graph: nx.Graph,
    min_size: int,
    max_size: int,
    limit: int | None = None,
    samples: int | None = None,
    seed: int | None = None,
) -> FamilySweep:
    """Every pairwise-intersecting family up to ``limit``, else a seeded sample per size."""
    limit = limit if limit is not None else settings.exhaustive_limit
    families = list(islice(_cliques_upward(graph, min_size, max_size), limit + 1))
    if len(families) <= limit:
        return FamilySweep(families=families, sampled=False)
    rng = np.random.default_rng(seed if seed is not None else settings.seed)
    count = samples if samples is not None else settings.sweep_samples
    sampled: list[Family] = []
    for size in range(min_size, max_size + 1):
        sampled.extend(sample_families(graph, size, count, rng))
    logger.debug(f"Family sweep passed {limit} families; sampled {len(sampled)}")
    return FamilySweep(families=sampled, sampled=True)


def common_intersection(sets: Sequence[VertexSet], family: Family) -> VertexSet:
    result = sets[family[0]]
    for i in family[1:]:
        result = result & sets[i]
    return result


def _describe(members: Iterable[Hashable], label: Callable[[Hashable], str]) -> list[str]:
    return sorted(label(v) for v in members)


def maximal_cliques(g: SimpleGraph) -> list[VertexSet]:
    cliques = [frozenset(c) for c in nx.find_cliques(g.graph)]
    return sorted(cliques, key=lambda c: (len(c), sorted(map(str, c))))


def maximal_cliques_through(
    source: NeighborSource, centers: Iterable[Hashable]
) -> list[VertexSet]:
    """Maximal cliques of a possibly infinite graph that contain one of ``centers``.

    A clique through v lies in the closed neighborhood of v, so the cliques are
    read off the subgraph induced there.
    """
    found: set[VertexSet] = set()
    for v in centers:
        closed = {v, *source.neighbors(v)}
        local = nx.Graph()
        local.add_nodes_from(closed)
        for u in closed:
            local.add_edges_from((u, w) for w in source.neighbors(u) if w in closed)
        found.update(frozenset(c) for c in nx.find_cliques(local, nodes=[v]))
    return sorted(found, key=lambda c: (len(c), sorted(map(str, c))))


def _first_empty(
    sets: Sequence[VertexSet], families: list[Family], jobs: int | None
) -> Family | None:
    empty = map_in_order(lambda f: not common_intersection(sets, f), families, jobs)
    for family, is_empty in zip(families, empty):
        if is_empty:
            return family
    return None


def clique_helly_check(
    g: NeighborSource,
    max_family: int | None = None,
    centers: Iterable[Hashable] | None = None,
    label: Callable[[Hashable], str] = str,
    seed: int | None = None,
    jobs: int | None = None,
) -> HellyCheckReport:
    """Finite Helly for families of maximal cliques; with ``centers``, only cliques through them."""
    max_family = max_family if max_family is not None else settings.max_family
    if centers is not None:
        cliques = maximal_cliques_through(g, centers)
    elif isinstance(g, SimpleGraph):
        cliques = maximal_cliques(g)
    else:
        raise InputError("cliques of an implicit graph need centers")
    sweep = sweep_families(intersection_graph(cliques), 2, max_family, seed=seed)
    violation = _first_empty(cliques, sweep.families, jobs)
    logger.info(
        f"Clique Helly: {len(cliques)} maximal cliques, {len(sweep.families)} families"
    )
    return HellyCheckReport(
        check="clique",
        families_tested=len(sweep.families),
        sampled=sweep.sampled,
        max_family=max_family,
        passed=violation is None,
        counterexample=None
        if violation is None
        else [_describe(cliques[i], label) for i in violation],
        note="clique Helly together with simple connectivity of the clique complex "
        "gives Helly; only clique Helly is checked",
    )


def ball_helly_check(
    source: NeighborSource,
    centers: Iterable[Hashable],
    max_family: int | None = None,
    max_radius: int | None = None,
    label: Callable[[Hashable], str] = str,
    seed: int | None = None,
    jobs: int | None = None,
) -> HellyCheckReport:
    max_family = max_family if max_family is not None else settings.max_family
    max_radius = max_radius if max_radius is not None else settings.max_radius
    balls: list[VertexSet] = []
    names: list[str] = []
    seen: set[VertexSet] = set()
    for c in centers:
        for r in range(1, max_radius + 1):
            ball = ball_of(source, c, r)
            if ball not in seen:
                seen.add(ball)
                balls.append(ball)
                names.append(f"B({label(c)}, {r})")
    sweep = sweep_families(intersection_graph(balls), 2, max_family, seed=seed)
    violation = _first_empty(balls, sweep.families, jobs)
    logger.info(f"Ball Helly: {len(balls)} balls, {len(sweep.families)} families")
    return HellyCheckReport(
        check="ball",
        families_tested=len(sweep.families),
        sampled=sweep.sampled,
        max_family=max_family,
        max_radius=max_radius,
        passed=violation is None,
        counterexample=None
        if violation is None
        else [[names[i], *_describe(balls[i], label)] for i in violation],
    )


def triple_cover_failures(
    sets: Sequence[VertexSet], triples: Iterable[Family], cover_pool: Sequence[VertexSet]
) -> list[Family]:
    """Triples whose pairwise intersections lie in no member of ``cover_pool``."""
    failures = []
    for i, j, k in triples:
        union = (sets[i] & sets[j]) | (sets[j] & sets[k]) | (sets[k] & sets[i])
        if not any(union <= member for member in cover_pool):
            failures.append((i, j, k))
    return failures


def helly_criterion_check(
    sets: Sequence[VertexSet],
    max_family: int | None = None,
    names: Sequence[str] | None = None,
    seed: int | None = None,
) -> HellyCheckReport:
    """Hypotheses of the clique-Helly criterion for a finite set family.

    Checks finite Helly for pairwise-intersecting subfamilies, that every
    pairwise-intersecting triple has its pairwise intersections inside one
    member, and that every maximal clique of the thickening lies in a member.
    """
    max_family = max_family if max_family is not None else settings.max_family
    names = list(names) if names is not None else [str(i) for i in range(len(sets))]
    graph = intersection_graph(sets)
    sweep = sweep_families(graph, 2, max_family, seed=seed)
    violation = _first_empty(sets, sweep.families, jobs=1)
    triples = [f for f in sweep_families(graph, 3, 3, seed=seed).families if len(f) == 3]
    failures = triple_cover_failures(sets, triples, sets)
    vertices = set().union(*sets) if sets else set()
    outside = [
        clique
        for clique in maximal_cliques(thickening(vertices, sets))
        if not any(clique <= member for member in sets)
    ]
    counterexample = None
    if violation is not None:
        counterexample = [[names[i]] for i in violation]
    elif failures:
        counterexample = [[names[i]] for i in failures[0]]
    elif outside:
        counterexample = [sorted(map(str, outside[0]))]
    return HellyCheckReport(
        check="criterion",
        families_tested=len(sweep.families) + len(triples),
        sampled=sweep.sampled,
        max_family=max_family,
        passed=counterexample is None,
        counterexample=counterexample,
    )
