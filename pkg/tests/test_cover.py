"""Tests for maximal cell covers of triple intersections."""

import pytest

from artinhelly.coxeter.graph import graph_from_edges
from artinhelly.errors import NotPairwiseIntersecting, StructureViolation
from artinhelly.salvetti.ball import build_ball
from artinhelly.salvetti.cells import make_cell
from artinhelly.salvetti.cover import triple_max_cell_cover
from artinhelly.salvetti.fc import certify_fc
from artinhelly.salvetti.oracles import choose_oracle

A, B = (0, 1), (1, 1)
A_INV, B_INV = (0, -1), (1, -1)


@pytest.fixture(scope="module")
def z2_ball(z2_fc):
    return build_ball(z2_fc, 4, choose_oracle(z2_fc))


@pytest.fixture(scope="module")
def path_ball(path_fc):
    return build_ball(path_fc, 4, choose_oracle(path_fc))


@pytest.fixture(scope="module")
def square_fc():
    """The right-angled group of a 4-cycle a, b, c, d."""
    edges = [("a", "b", 2), ("b", "c", 2), ("c", "d", 2), ("d", "a", 2)]
    return certify_fc(graph_from_edges(["a", "b", "c", "d"], edges))


@pytest.fixture(scope="module")
def square_ball(square_fc):
    return build_ball(square_fc, 3, choose_oracle(square_fc))


def cell_at(ball, fc, word, cell_type):
    return make_cell(ball, fc, ball.index[ball.oracle.canonical(word)], cell_type)


class TestTripleMaxCellCover:
    """Test covers of three pairwise intersecting maximal cells."""

    def test_z2_corner(self, z2_ball, z2_fc):
        """Test three squares around the identity are covered by the square there."""
        cells = [cell_at(z2_ball, z2_fc, w, (0, 1)) for w in ([], [A_INV], [B_INV])]
        cover = triple_max_cell_cover(z2_ball, z2_fc, *cells)

        assert cover.cell == cells[0]
        assert cover.case == 1
        assert cover.pivot == 0
        assert cover.pivot_type == (0, 1)

    def test_two_types(self, path_ball, path_fc):
        """Test two hexagons and a square sharing the identity."""
        cells = [
            cell_at(path_ball, path_fc, [], (0, 1)),
            cell_at(path_ball, path_fc, [], (1, 2)),
            cell_at(path_ball, path_fc, [B_INV], (0, 1)),
        ]
        cover = triple_max_cell_cover(path_ball, path_fc, *cells)
        pairwise = (
            (cells[0].vertex_set & cells[1].vertex_set)
            | (cells[1].vertex_set & cells[2].vertex_set)
            | (cells[2].vertex_set & cells[0].vertex_set)
        )

        assert cover.case == 2
        assert pairwise <= cover.cell.vertex_set
        assert path_fc.is_maximal(cover.cell.cell_type)

    def test_non_maximal_input(self, z2_ball, z2_fc):
        """Test that edges are not accepted."""
        edge = cell_at(z2_ball, z2_fc, [], (0,))
        square = cell_at(z2_ball, z2_fc, [], (0, 1))

        with pytest.raises(StructureViolation, match="maximal"):
            triple_max_cell_cover(z2_ball, z2_fc, square, square, edge)

    def test_disjoint_pair(self, z2_ball, z2_fc):
        """Test that a disjoint pair is reported by position."""
        cells = [cell_at(z2_ball, z2_fc, w, (0, 1)) for w in ([], [A_INV], [A, A])]

        with pytest.raises(NotPairwiseIntersecting, match="cells 2 and 3"):
            triple_max_cell_cover(z2_ball, z2_fc, *cells)

    def test_three_types(self, square_ball, square_fc):
        """Test squares of types ab, bc and cd meeting at b.

        The ab square meets the others only at b, while the bc and cd squares
        share the c edge from b, so the pivot type is {c}.
        """
        cells = [
            cell_at(square_ball, square_fc, [], (0, 1)),
            cell_at(square_ball, square_fc, [B], (1, 2)),
            cell_at(square_ball, square_fc, [B], (2, 3)),
        ]
        cover = triple_max_cell_cover(square_ball, square_fc, *cells)
        b = square_ball.index[square_ball.oracle.canonical([B])]

        assert cover.case == 3
        assert cover.pivot == b
        assert cover.pivot_type == (2,)
        assert cover.cell.cell_type == (1, 2)
        assert cover.cell.source == b
        assert cells[1].vertex_set & cells[2].vertex_set <= cover.cell.vertex_set
