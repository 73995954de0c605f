from collections import Counter
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from itertools import combinations

from loguru import logger

from ..config.settings import settings
from ..errors import ArtinHellyError
from ..formats.models import ConditionReport, Verdict
from ..hellygraph.checks import Family, intersection_graph, sweep_families
from ..parallel import map_in_order
from .ball import CayleyBall
from .cells import (
    SCell,
    cell_intersection_x,
    cells_in_ball,
    check_margin,
    family_intersection,
    inside_margin,
)
from .cover import triple_max_cell_cover
from .fc import FCGraph

COUNTEREXAMPLE_LIMIT = 5


@dataclass
class CellHellyRun:
    cells: list[SCell]
    inner: list[int]
    conditions: list[ConditionReport]
    cover_cases: Counter[int] = field(default_factory=Counter)

    @property
    def vacuous(self) -> bool:
        """Some condition had families, and the margin dropped every one of them."""
        return any(c.tested == 0 and c.skipped > 0 for c in self.conditions)

    @property
    def verdict(self) -> Verdict:
        if any(c.violations for c in self.conditions):
            return Verdict.FAIL
        return Verdict.VACUOUS if self.vacuous else Verdict.PASS

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.PASS


def describe_cell(ball: CayleyBall, fc: FCGraph, cell: SCell) -> str:
    names = ",".join(fc.graph.names(cell.cell_type))
    return f"[{ball.render(cell.source)} ; {{{names}}}]"


def _intersecting_pairs(
    cells: Sequence[SCell], members: Iterable[int]
) -> list[tuple[int, int]]:
    by_vertex: dict[int, list[int]] = {}
    for i in members:
        for v in cells[i].vertex_set:
            by_vertex.setdefault(v, []).append(i)
    pairs: set[tuple[int, int]] = set()
    for owners in by_vertex.values():
        pairs.update(combinations(sorted(owners), 2))
    return sorted(pairs)


def _record(report: ConditionReport, failures: list[list[str] | None]) -> None:
    for failure in failures:
        if failure is None:
            continue
        report.violations += 1
        if len(report.counterexamples) < COUNTEREXAMPLE_LIMIT:
            report.counterexamples.append(failure)


def cell_helly_verify(
    ball: CayleyBall,
    fc: FCGraph,
    margin: int,
    max_family: int | None = None,
    seed: int | None = None,
    jobs: int | None = None,
) -> CellHellyRun:
    """Replays the three cell-Helly conditions on the cells of a ball.

    Families are drawn from the cells meeting the inner ball of radius - margin.
    A pair or Helly family is tested when every pairwise intersection of its
    members lies in the inner ball. A triple of maximal cells is tested when its
    common intersection is empty or meets the inner ball; the covering cell
    holds such a vertex and Δ is no longer than the margin, so the cover fits
    in the ball. Drawn families failing the bound are counted as skipped.
    """
    check_margin(fc, margin)
    max_family = max_family if max_family is not None else settings.max_family
    seed = seed if seed is not None else settings.seed
    cells = cells_in_ball(ball, fc)
    limit = ball.radius - margin
    inner = [
        i for i, c in enumerate(cells) if any(ball.distance[v] <= limit for v in c.vertex_set)
    ]
    inner_maximal = [i for i in inner if fc.is_maximal(cells[i].cell_type)]
    logger.info(
        f"Verifying {len(cells)} cells, {len(inner)} meeting the inner ball "
        f"(radius {ball.radius}, margin {margin})"
    )

    def within_bounds(family: Sequence[int]) -> bool:
        return all(
            inside_margin(ball, cells[i].vertex_set & cells[j].vertex_set, margin)
            for i, j in combinations(family, 2)
        )

    def cover_within_bounds(triple: Sequence[int]) -> bool:
        common = frozenset.intersection(*(cells[i].vertex_set for i in triple))
        return not common or any(ball.distance[v] <= limit for v in common)

    def split(
        families: Iterable[Family],
        members: Sequence[int],
        keep: Callable[[Sequence[int]], bool] = within_bounds,
    ) -> tuple[list[Family], int]:
        tested: list[Family] = []
        skipped = 0
        for family in families:
            ambient = tuple(members[k] for k in family)
            if keep(ambient):
                tested.append(ambient)
            else:
                skipped += 1
        return tested, skipped

    def pair_failure(pair: Family) -> list[str] | None:
        c1, c2 = cells[pair[0]], cells[pair[1]]
        try:
            cell_intersection_x(ball, fc, c1, c2)
        except ArtinHellyError as e:
            return [describe_cell(ball, fc, c1), describe_cell(ball, fc, c2), e.message]
        return None

    everything = range(len(cells))
    pairs, skipped_pairs = split(_intersecting_pairs(cells, inner), everything)
    first = ConditionReport(
        condition=1,
        name="pairwise intersections are intervals",
        tested=len(pairs),
        skipped=skipped_pairs,
    )
    _record(first, map_in_order(pair_failure, pairs, jobs))

    def family_failure(family: Family) -> list[str] | None:
        members = [cells[i] for i in family]
        try:
            if family_intersection(ball, fc, members) is not None:
                return None
            reason = "empty intersection"
        except ArtinHellyError as e:
            reason = e.message
        return [describe_cell(ball, fc, c) for c in members] + [reason]

    sweep = sweep_families(
        intersection_graph([cells[i].vertex_set for i in inner]), 2, max_family, seed=seed
    )
    families, skipped_families = split(sweep.families, inner)
    second = ConditionReport(
        condition=2,
        name="finite Helly property",
        tested=len(families),
        skipped=skipped_families,
        sampled=sweep.sampled,
    )
    _record(second, map_in_order(family_failure, families, jobs))

    def triple_failure(triple: Family) -> tuple[int, list[str] | None]:
        members = [cells[i] for i in triple]
        try:
            cover = triple_max_cell_cover(ball, fc, *members)
        except ArtinHellyError as e:
            return 0, [describe_cell(ball, fc, c) for c in members] + [e.message]
        return cover.case, None

    sweep = sweep_families(
        intersection_graph([cells[i].vertex_set for i in inner_maximal]), 3, 3, seed=seed
    )
    triples, skipped_triples = split(sweep.families, inner_maximal, cover_within_bounds)
    outcomes = map_in_order(triple_failure, triples, jobs)
    cases = Counter(case for case, failure in outcomes if failure is None)
    third = ConditionReport(
        condition=3,
        name="triple intersections covered by a maximal cell",
        tested=len(triples),
        skipped=skipped_triples,
        sampled=sweep.sampled,
    )
    _record(third, [failure for _, failure in outcomes])
    conditions = [first, second, third]
    for report in conditions:
        logger.info(
            f"Condition {report.condition}: {report.tested} tested, "
            f"{report.skipped} skipped, {report.violations} violations"
        )
        if report.tested == 0 and report.skipped > 0:
            logger.warning(f"Condition {report.condition}: every family reaches the margin")
    return CellHellyRun(cells=cells, inner=inner, conditions=conditions, cover_cases=cases)
