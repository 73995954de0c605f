import networkx as nx

from ..errors import StructureViolation
from .group import CoxElt, CoxeterGroup


def oriented_coxeter_cell(group: CoxeterGroup) -> nx.DiGraph:
    """Hasse diagram of the right weak order, oriented from short to long."""
    cell = nx.DiGraph()
    for w in range(group.order):
        cell.add_node(w, label=group.render(w), length=int(group.length[w]))
    for w in range(group.order):
        for s in range(group.rank):
            ws = int(group.right_gen[w, s])
            if group.length[ws] == group.length[w] + 1:
                cell.add_edge(w, ws, generator=group.graph.vertices[s])
    return cell


def cell_source(group: CoxeterGroup, cell: nx.DiGraph) -> CoxElt:
    sources = [v for v in cell.nodes if cell.in_degree(v) == 0]
    if len(sources) != 1:
        raise StructureViolation("unique source", f"found {len(sources)}")
    return group.element(sources[0])


def cell_sink(group: CoxeterGroup, cell: nx.DiGraph) -> CoxElt:
    sinks = [v for v in cell.nodes if cell.out_degree(v) == 0]
    if len(sinks) != 1:
        raise StructureViolation("unique sink", f"found {len(sinks)}")
    return group.element(sinks[0])


def to_dot(cell: nx.DiGraph, name: str = "cell") -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT"]
    for v, data in sorted(cell.nodes(data=True)):
        lines.append(f'  {v} [label="{data.get("label", v)}"]')
    for u, v, data in sorted(cell.edges(data=True)):
        lines.append(f'  {u} -> {v} [label="{data.get("generator", "")}"]')
    lines.append("}")
    return "\n".join(lines) + "\n"
