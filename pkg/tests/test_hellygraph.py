"""Tests for simple graphs, thickenings and Helly checks."""

from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artinhelly.errors import InputError
from artinhelly.hellygraph.checks import (
    ball_helly_check,
    clique_helly_check,
    helly_criterion_check,
    intersection_graph,
    maximal_cliques,
    maximal_cliques_through,
    sweep_families,
)
from artinhelly.hellygraph.graph import (
    SimpleGraph,
    ball_of,
    complete,
    cycle,
    load_edge_list,
    octahedron,
    path,
)
from artinhelly.hellygraph.thickening import TranslationThickening, thickening
from artinhelly.salvetti.synthetic import load_synthetic

small_graphs = st.integers(1, 9).flatmap(
    lambda n: st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))).map(
        lambda pairs: (n, {(u, v) for u, v in pairs if u < v})
    )
)


def brute_force_maximal_cliques(n, edges):
    def is_clique(subset):
        return all((u, v) in edges for u, v in combinations(subset, 2))

    cliques = [frozenset(s) for k in range(1, n + 1) for s in combinations(range(n), k) if is_clique(s)]
    return {c for c in cliques if not any(c < other for other in cliques)}


class TestSimpleGraph:
    """Test the SimpleGraph wrapper."""

    def test_from_edge_list(self):
        """Test parsing edges, lone vertices and comments."""
        graph = SimpleGraph.from_edge_list("# square\n0 1\n1 2\n\n7\n")

        assert sorted(graph.vertices) == ["0", "1", "2", "7"]
        assert graph.adjacent("0", "1")
        assert not graph.adjacent("0", "2")

    def test_bad_line(self):
        """Test that three names on a line are rejected with the line number."""
        with pytest.raises(InputError, match="line 2"):
            SimpleGraph.from_edge_list("0 1\n0 1 2\n")

    def test_loop(self):
        """Test that loops are rejected."""
        with pytest.raises(InputError):
            SimpleGraph.from_edge_list("0 0\n")

    def test_load_missing_file(self, tmp_path):
        """Test that a missing file is an input error."""
        with pytest.raises(InputError):
            load_edge_list(tmp_path / "nothing.txt")

    def test_ball(self):
        """Test a radius-2 ball in C_6."""
        assert cycle(6).ball(0, 2) == frozenset({4, 5, 0, 1, 2})

    def test_edge_list_and_dot(self):
        """Test exports of a path."""
        graph = path(3)

        assert SimpleGraph.from_edge_list(graph.to_edge_list()).edges == [("0", "1"), ("1", "2")]
        assert graph.to_dot().startswith("graph G {")


class TestMaximalCliques:
    """Test maximal clique enumeration."""

    def test_triangle(self):
        """Test K_3 has one maximal clique."""
        assert maximal_cliques(complete(3)) == [frozenset({0, 1, 2})]

    def test_cycle(self):
        """Test C_4 cliques are its edges."""
        assert len(maximal_cliques(cycle(4))) == 4

    @settings(derandomize=True, max_examples=60)
    @given(graph=small_graphs)
    def test_against_subset_scan(self, graph):
        """Test against a brute-force subset scan."""
        n, edges = graph
        g = SimpleGraph(nx.Graph(list(edges)))
        for v in range(n):
            g.add_vertex(v)

        found = maximal_cliques(g)

        assert len(found) == len(set(found))
        assert set(found) == brute_force_maximal_cliques(n, edges)

    def test_cliques_through_centers(self):
        """Test that only maximal cliques holding a center are kept."""
        graph = thickening(range(4), [(0, 1, 2), (2, 3)])

        assert maximal_cliques_through(graph, [0]) == [frozenset({0, 1, 2})]
        assert maximal_cliques_through(graph, [3]) == [frozenset({2, 3})]
        assert maximal_cliques_through(graph, [2]) == [frozenset({2, 3}), frozenset({0, 1, 2})]

    def test_cliques_through_implicit_graph(self):
        """Test maximal cliques of a lazily given line."""
        line = TranslationThickening(lambda v, o: v + o, [1, -1])

        assert maximal_cliques_through(line, [0]) == [frozenset({-1, 0}), frozenset({0, 1})]


class TestThickening:
    """Test thickenings of cell families."""

    def test_adjacency(self):
        """Test that two vertices are adjacent iff a cell holds both."""
        graph = thickening(range(1, 5), [(1, 2, 3), (3, 4)])

        assert graph.adjacent(1, 3)
        assert graph.adjacent(3, 4)
        assert not graph.adjacent(1, 4)

    def test_translation_thickening(self):
        """Test a lazy thickening of ℤ."""
        line = TranslationThickening(lambda v, o: v + o, [1, -1])

        assert line.neighbors(0) == frozenset({-1, 1})
        assert line.degree == 2
        assert ball_of(line, 0, 2) == frozenset(range(-2, 3))


class TestSweeps:
    """Test family enumeration."""

    def test_exhaustive(self):
        """Test pairwise-intersecting families of three sets."""
        graph = intersection_graph([frozenset({1, 2}), frozenset({2, 3}), frozenset({5})])
        sweep = sweep_families(graph, 2, 3)

        assert sweep.families == [(0, 1)]
        assert not sweep.sampled

    def test_sampled_when_over_limit(self):
        """Test that large sweeps are sampled deterministically."""
        graph = complete(6).graph
        first = sweep_families(graph, 2, 4, limit=10, samples=5, seed=1)
        second = sweep_families(graph, 2, 4, limit=10, samples=5, seed=1)

        assert first.sampled
        assert first.families == second.families
        assert all(2 <= len(f) <= 4 for f in first.families)


class TestHellyChecks:
    """Test clique-Helly and ball-Helly sweeps."""

    def test_triangle_clique_helly(self):
        """Test K_3 passes trivially."""
        report = clique_helly_check(complete(3))

        assert report.passed
        assert report.families_tested == 0

    def test_octahedron_clique_helly(self):
        """Test that the octahedron is clique Helly."""
        assert clique_helly_check(octahedron(), max_family=4).passed

    def test_octahedron_file(self, data_dir):
        """Test the octahedron fixture."""
        graph = load_edge_list(data_dir / "octahedron.txt")

        assert len(graph.edges) == 12
        assert clique_helly_check(graph).passed

    def test_c4_balls(self, data_dir):
        """Test that the four unit balls of C_4 have no common vertex."""
        graph = load_edge_list(data_dir / "c4.txt")
        report = ball_helly_check(graph, sorted(graph.vertices), max_family=4, max_radius=1)

        assert not report.passed
        assert report.counterexample is not None
        assert len(report.counterexample) == 4

    def test_c6_balls(self):
        """Test the three alternate unit balls of C_6."""
        graph = cycle(6)
        report = ball_helly_check(graph, graph.vertices, max_family=3, max_radius=1)

        assert not report.passed
        assert len(report.counterexample) == 3

    def test_c4_cliques(self):
        """Test that C_4 is clique Helly."""
        assert clique_helly_check(cycle(4)).passed

    def test_line_clique_helly_from_centers(self):
        """Test clique Helly on a lazily given line around a few centers."""
        line = TranslationThickening(lambda v, o: v + o, [1, -1])
        report = clique_helly_check(line, max_family=3, centers=range(-2, 3))

        assert report.passed
        assert report.families_tested > 0

    def test_implicit_graph_needs_centers(self):
        """Test that an implicit graph has no global clique list."""
        line = TranslationThickening(lambda v, o: v + o, [1, -1])

        with pytest.raises(InputError, match="need centers"):
            clique_helly_check(line)

    def test_line_is_ball_helly(self):
        """Test balls of a lazily given line."""
        line = TranslationThickening(lambda v, o: v + o, [1, -1])
        report = ball_helly_check(line, range(-3, 4), max_family=4, max_radius=2)

        assert report.passed
        assert report.max_radius == 2

    def test_criterion_cube(self, data_dir):
        """Test that the cube 2-skeleton fails the triple cover hypothesis."""
        complex_ = load_synthetic(data_dir / "cube_skeleton.json")
        report = helly_criterion_check(complex_.cells, names=complex_.names)

        assert not report.passed
        assert report.counterexample is not None
        assert all(name[0][0] in "xyz" for name in report.counterexample)

    def test_criterion_square(self, data_dir):
        """Test a single square with its faces."""
        complex_ = load_synthetic(data_dir / "square.json")

        assert helly_criterion_check(complex_.cells, names=complex_.names).passed
