from collections import Counter
from collections.abc import Sequence

from ..formats.models import BallReport, BallVertex
from .ball import CayleyBall
from .cells import SCell
from .fc import FCGraph


def ball_report(
    ball: CayleyBall, cells: Sequence[SCell], with_vertices: bool = True
) -> BallReport:
    distances = Counter(int(d) for d in ball.distance)
    dimensions = Counter(c.dimension for c in cells)
    return BallReport(
        oracle=ball.oracle.kind,
        radius=ball.radius,
        vertex_count=len(ball),
        edge_count=sum(1 for _ in ball.edges()),
        distance_counts={str(d): distances[d] for d in sorted(distances)},
        cells_by_dimension={str(k): dimensions[k] for k in sorted(dimensions)},
        vertices=[
            BallVertex(word=ball.render(i), distance=int(ball.distance[i]))
            for i in range(len(ball))
        ]
        if with_vertices
        else [],
    )


def ball_to_dot(
    ball: CayleyBall, fc: FCGraph, cells: Sequence[SCell] = (), name: str = "ball"
) -> str:
    """Oriented, labeled 1-skeleton; cells of dimension two or more are listed as comments."""
    names = fc.graph.vertices
    lines = [f"digraph {name} {{"]
    lines.extend(f'  {i} [label="{ball.render(i)}"];' for i in range(len(ball)))
    lines.extend(f'  {i} -> {j} [label="{names[g]}"];' for i, j, g in ball.edges())
    for cell in cells:
        if cell.dimension < 2:
            continue
        members = " ".join(str(v) for v in sorted(cell.vertex_set))
        lines.append(
            f"  // cell {{{','.join(fc.graph.names(cell.cell_type))}}} "
            f"source {cell.source} sink {cell.sink}: {members}"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
