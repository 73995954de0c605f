from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from itertools import combinations

import networkx as nx
import numpy as np
from loguru import logger

from ..coxeter.graph import Clique
from ..coxeter.group import CoxeterGroup, embed_word, longest_element
from ..coxeter.parabolic import minimal_coset_representative
from ..coxeter.weak_order import interval, join_table, meet_table
from ..errors import InputError, MarginTooSmall, StructureViolation
from ..hellygraph.thickening import TranslationThickening
from .ball import OUTSIDE, CayleyBall, letter_column
from .fc import FCGraph
from .oracles import Key, Letter, WordOracle, inverse_word


@dataclass(frozen=True)
class SCell:
    """A cell of X_Γ: ``vertices[w]`` is the ball index of source·w for w in W of the type."""

    source: int
    cell_type: Clique
    vertices: tuple[int, ...] = field(compare=False)
    vertex_set: frozenset[int] = field(compare=False)
    sink: int = field(compare=False)

    @property
    def dimension(self) -> int:
        return len(self.cell_type)

    def position(self, v: int) -> int:
        return self.vertices.index(v)


@dataclass(frozen=True)
class XInterval:
    low: int
    high: int
    vertices: frozenset[int]


@dataclass(frozen=True)
class StdSubcomplex:
    base: int
    sub_type: Clique
    vertex_set: frozenset[int]


def make_cell(ball: CayleyBall, fc: FCGraph, source: int, cell_type: Clique) -> SCell | None:
    """The cell of ``cell_type`` with the given source, or None if it leaves the ball."""
    group = fc.group(cell_type)
    vertices = [source] * group.order
    for w in range(1, group.order):
        g = cell_type[int(group.last[w])]
        v = int(ball.step[vertices[int(group.parent[w])], letter_column((g, 1))])
        if v == OUTSIDE:
            return None
        vertices[w] = v
    if len(set(vertices)) != group.order:
        raise StructureViolation("cell vertices are distinct", ball.render(source))
    return SCell(
        source=source,
        cell_type=tuple(cell_type),
        vertices=tuple(vertices),
        vertex_set=frozenset(vertices),
        sink=vertices[longest_element(group).index],
    )


def cells_in_ball(ball: CayleyBall, fc: FCGraph) -> list[SCell]:
    """Every cell, of every clique type including the empty one, lying inside the ball."""
    cells = []
    for source in range(len(ball)):
        for clique in fc.cliques:
            cell = make_cell(ball, fc, source, clique)
            if cell is not None:
                cells.append(cell)
    logger.debug(f"{len(cells)} cells inside the ball of radius {ball.radius}")
    return cells


def check_margin(fc: FCGraph, margin: int) -> None:
    required = fc.max_delta_length
    if margin < required:
        raise MarginTooSmall(margin, required)


def inside_margin(ball: CayleyBall, vertices: Iterable[int], margin: int) -> bool:
    """Whether every vertex keeps at least ``margin`` away from the ball boundary."""
    limit = ball.radius - margin
    return all(ball.distance[v] <= limit for v in vertices)


def _interval_in_cell(fc: FCGraph, cell: SCell, members: frozenset[int]) -> tuple[int, int]:
    group = fc.group(cell.cell_type)
    positions = [cell.position(v) for v in members]
    meet = meet_table(group)
    join = join_table(group)
    low = high = positions[0]
    for w in positions[1:]:
        low = int(meet[low, w])
        high = int(join[high, w])
    span = interval(group, group.element(low), group.element(high))
    if {cell.vertices[w] for w in span} != members:
        raise StructureViolation(
            "intersection is an interval",
            f"not an interval of the cell at {cell.source} of type {cell.cell_type}",
        )
    return cell.vertices[low], cell.vertices[high]


def _connected(ball: CayleyBall, members: frozenset[int]) -> bool:
    graph = nx.Graph()
    graph.add_nodes_from(members)
    for v in members:
        graph.add_edges_from((v, int(w)) for w in ball.step[v] if int(w) in members)
    return nx.is_connected(graph)


def family_intersection(
    ball: CayleyBall, fc: FCGraph, cells: Sequence[SCell]
) -> XInterval | None:
    """Common vertices of the cells, certified to be one interval of every member."""
    if not cells:
        raise InputError("family intersection needs at least one cell")
    common = cells[0].vertex_set
    for cell in cells[1:]:
        common = common & cell.vertex_set
    if not common:
        return None
    bounds = {_interval_in_cell(fc, cell, common) for cell in cells}
    if len(bounds) != 1:
        raise StructureViolation("intersection bounds agree across cells", str(sorted(bounds)))
    if not _connected(ball, common):
        raise StructureViolation("intersection is connected")
    low, high = bounds.pop()
    return XInterval(low=low, high=high, vertices=common)


def intersection_type(ball: CayleyBall, cell: SCell, common: XInterval) -> Clique:
    """Type of the face of ``cell`` spanned by the interval ``common``."""
    return tuple(
        g
        for g in cell.cell_type
        if int(ball.step[common.low, letter_column((g, 1))]) in common.vertices
    )


def cell_intersection_x(
    ball: CayleyBall, fc: FCGraph, c1: SCell, c2: SCell
) -> XInterval | None:
    return family_intersection(ball, fc, (c1, c2))


def face_through(
    ball: CayleyBall, fc: FCGraph, cell: SCell, vertex: int, sub_type: Clique
) -> SCell:
    """The face of ``cell`` of type ``sub_type`` containing ``vertex``."""
    if not set(sub_type) <= set(cell.cell_type):
        raise InputError(f"type {sub_type} is not a face type of {cell.cell_type}")
    if vertex not in cell.vertex_set:
        raise InputError(f"vertex {ball.render(vertex)} is not in the cell")
    group = fc.group(cell.cell_type)
    local = [cell.cell_type.index(g) for g in sub_type]
    u = minimal_coset_representative(group, cell.position(vertex), local)
    face = make_cell(ball, fc, cell.vertices[u], tuple(sorted(sub_type)))
    if face is None or not face.vertex_set <= cell.vertex_set:
        raise StructureViolation("faces lie inside their cell", ball.render(cell.source))
    return face


def is_face(ball: CayleyBall, fc: FCGraph, e: SCell, c: SCell) -> bool:
    if not set(e.cell_type) <= set(c.cell_type) or e.source not in c.vertex_set:
        return False
    return face_through(ball, fc, c, e.source, e.cell_type) == e


def fullness_violations(
    ball: CayleyBall, fc: FCGraph, cells: Sequence[SCell]
) -> list[tuple[SCell, SCell]]:
    """Pairs (e, c) where e's vertices lie in c but e is not a face of c."""
    by_vertex: dict[int, list[SCell]] = {}
    for cell in cells:
        by_vertex.setdefault(cell.source, []).append(cell)
    violations = []
    for c in cells:
        for v in c.vertex_set:
            for e in by_vertex.get(v, []):
                if e.vertex_set <= c.vertex_set and not is_face(ball, fc, e, c):
                    violations.append((e, c))
    return violations


def sink_violations(cells: Sequence[SCell]) -> list[tuple[SCell, SCell]]:
    """Distinct cells sharing a vertex set or a sink together with their type."""
    by_set: dict[frozenset[int], SCell] = {}
    by_sink: dict[tuple[int, Clique], SCell] = {}
    violations = []
    for cell in cells:
        first = by_set.setdefault(cell.vertex_set, cell)
        if first != cell:
            violations.append((first, cell))
        first = by_sink.setdefault((cell.sink, cell.cell_type), cell)
        if first != cell:
            violations.append((first, cell))
    return violations


def standard_subcomplex(ball: CayleyBall, base: int, sub_type: Iterable[int]) -> StdSubcomplex:
    """Vertices reachable from ``base`` inside the ball along edges labeled by ``sub_type``."""
    generators = tuple(sorted(sub_type))
    columns = [letter_column((g, e)) for g in generators for e in (1, -1)]
    seen = {base}
    frontier = [base]
    while frontier:
        following = []
        for v in frontier:
            for column in columns:
                w = int(ball.step[v, column])
                if w != OUTSIDE and w not in seen:
                    seen.add(w)
                    following.append(w)
        frontier = following
    return StdSubcomplex(base=base, sub_type=generators, vertex_set=frozenset(seen))


def convexity_violations(ball: CayleyBall, sub: StdSubcomplex) -> list[tuple[int, int]]:
    """Pairs of subcomplex vertices near the center joined by a geodesic that leaves it.

    Only vertices within half the radius are paired, so their geodesics stay
    inside the ball and the ball distances are exact.
    """
    graph = ball.to_networkx()
    near = sorted(v for v in sub.vertex_set if ball.distance[v] <= ball.radius // 2)
    distances = {v: nx.single_source_shortest_path_length(graph, v) for v in near}
    violations = []
    for u, v in combinations(near, 2):
        d = distances[u][v]
        on_geodesic = {
            w for w, du in distances[u].items() if du + distances[v].get(w, d + 1) == d
        }
        if not on_geodesic <= sub.vertex_set:
            violations.append((u, v))
    return violations


def subcomplex_intersection_violations(
    ball: CayleyBall, x1: StdSubcomplex, x2: StdSubcomplex
) -> list[int]:
    """Common vertices near the center where X₁ ∩ X₂ differs from the subcomplex of type Γ₁ ∩ Γ₂."""
    limit = ball.radius // 2
    common = {v for v in x1.vertex_set & x2.vertex_set if ball.distance[v] <= limit}
    shared_type = tuple(sorted(set(x1.sub_type) & set(x2.sub_type)))
    violations = []
    for v in sorted(common):
        through = standard_subcomplex(ball, v, shared_type).vertex_set
        if {w for w in through if ball.distance[w] <= limit} != common:
            violations.append(v)
    return violations


def coxeter_projection(ball: CayleyBall, group: CoxeterGroup) -> np.ndarray:
    """Image in W_Γ of every ball vertex under the label-preserving map."""
    return np.array(
        [group.from_word(g for g, _ in word) for word in ball.words], dtype=np.int32
    )


def projection_violations(
    ball: CayleyBall, fc: FCGraph, group: CoxeterGroup, cells: Sequence[SCell]
) -> list[str]:
    """The projection is 1-Lipschitz and embeds every cell isometrically."""
    image = coxeter_projection(ball, group)
    violations = []
    for i, j, g in ball.edges():
        if group.mul(int(image[i]), group.generators[g]) != image[j]:
            name = ball.oracle.graph.vertices[g]
            violations.append(f"edge {ball.render(i)} --{name}--> is not mapped to an edge")
    for cell in cells:
        local = fc.group(cell.cell_type)
        for w in range(local.order):
            lifted = group.from_word(embed_word(local.words[w], cell.cell_type))
            expected = group.mul(int(image[cell.source]), lifted)
            if expected != image[cell.vertices[w]]:
                violations.append(f"cell at {ball.render(cell.source)} of type {cell.cell_type}")
                break
    return violations


def lift_word(fc: FCGraph, clique: Clique, w: int) -> list[Letter]:
    """Positive word over the ambient generators of the simple lifting w ∈ W of the clique."""
    return [(g, 1) for g in embed_word(fc.group(clique).words[w], clique)]


def thickening_neighbors(
    fc: FCGraph, oracle: WordOracle
) -> TranslationThickening[Key, list[Letter]]:
    """Exact thickening of X_Γ: v is adjacent to v·a⁻¹b for simples a, b of a maximal clique."""
    offsets: dict[Key, list[Letter]] = {}
    for clique in fc.maximal_cliques:
        group = fc.group(clique)
        lifts = [lift_word(fc, clique, w) for w in range(group.order)]
        for a in lifts:
            inverse_a = inverse_word(a)
            for b in lifts:
                key = oracle.canonical(inverse_a + b)
                if key != oracle.identity and key not in offsets:
                    offsets[key] = oracle.to_word(key)
    logger.debug(f"Thickening offsets: {len(offsets)}")
    return TranslationThickening(oracle.multiply_word, list(offsets.values()))
