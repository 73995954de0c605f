import json
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path

import networkx as nx
from loguru import logger
from pydantic import ValidationError

from ..config.settings import settings
from ..errors import InputError
from ..formats.models import ConditionReport, SyntheticComplexFile
from ..hellygraph.checks import (
    common_intersection,
    intersection_graph,
    sweep_families,
    triple_cover_failures,
)


@dataclass(frozen=True)
class SyntheticComplex:
    """Cells given by explicit vertex sets; the 2-vertex cells are the 1-skeleton."""

    names: list[str]
    cells: list[frozenset[str]]

    @property
    def vertices(self) -> frozenset[str]:
        return frozenset().union(*self.cells) if self.cells else frozenset()

    def skeleton(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(sorted(self.vertices))
        graph.add_edges_from(tuple(sorted(c)) for c in self.cells if len(c) == 2)
        return graph

    def maximal(self) -> list[int]:
        return [
            i
            for i, c in enumerate(self.cells)
            if not any(c < other for other in self.cells)
        ]


def synthetic_from_model(model: SyntheticComplexFile) -> SyntheticComplex:
    return SyntheticComplex(
        names=[c.name for c in model.cells],
        cells=[frozenset(c.vertices) for c in model.cells],
    )


def load_synthetic(path: Path | str) -> SyntheticComplex:
    try:
        model = SyntheticComplexFile.model_validate_json(Path(path).read_text(encoding="utf-8"))
    except (OSError, ValidationError, json.JSONDecodeError) as e:
        raise InputError(f"cannot read synthetic complex {path}: {e}") from e
    return synthetic_from_model(model)


def is_synthetic_file(path: Path | str) -> bool:
    try:
        document = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError):
        return False
    return isinstance(document, dict) and "cells" in document


def check_synthetic(
    complex_: SyntheticComplex,
    max_family: int | None = None,
    seed: int | None = None,
) -> list[ConditionReport]:
    """The three cell-Helly conditions on an explicit finite cell family."""
    max_family = max_family if max_family is not None else settings.max_family
    sets = complex_.cells
    names = complex_.names
    skeleton = complex_.skeleton()
    graph = intersection_graph(sets)

    first = ConditionReport(condition=1, name="pairwise intersections are connected")
    for i, j in sorted(graph.edges):
        i, j = min(i, j), max(i, j)
        first.tested += 1
        if not nx.is_connected(skeleton.subgraph(sets[i] & sets[j])):
            first.violations += 1
            first.counterexamples.append([names[i], names[j]])

    sweep = sweep_families(graph, 2, max_family, seed=seed)
    second = ConditionReport(
        condition=2, name="finite Helly property", tested=len(sweep.families), sampled=sweep.sampled
    )
    for family in sweep.families:
        if not common_intersection(sets, family):
            second.violations += 1
            second.counterexamples.append([names[i] for i in family])

    maximal = complex_.maximal()
    top = [sets[i] for i in maximal]
    triples = [
        (maximal[a], maximal[b], maximal[c])
        for a, b, c in combinations(range(len(maximal)), 3)
        if top[a] & top[b] and top[b] & top[c] and top[c] & top[a]
    ]
    failures = triple_cover_failures(sets, triples, top)
    third = ConditionReport(
        condition=3,
        name="triple intersections covered by a maximal cell",
        tested=len(triples),
        violations=len(failures),
        counterexamples=[[names[i] for i in triple] for triple in failures],
    )
    conditions = [first, second, third]
    for report in conditions:
        logger.info(
            f"Synthetic condition {report.condition}: {report.tested} tested, "
            f"{report.violations} violations"
        )
    return conditions
