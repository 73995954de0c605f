"""Tests for replaying the cell-Helly conditions on a ball."""

import pytest

from artinhelly.errors import MarginTooSmall
from artinhelly.formats.models import ConditionReport, Verdict
from artinhelly.salvetti.amalgam import AmalgamOracle
from artinhelly.salvetti.ball import build_ball
from artinhelly.salvetti.oracles import choose_oracle
from artinhelly.salvetti.verify import CellHellyRun, cell_helly_verify, describe_cell


@pytest.fixture(scope="module")
def z2_ball(z2_fc):
    return build_ball(z2_fc, 4, choose_oracle(z2_fc))


class TestCellHellyVerify:
    """Test cell_helly_verify."""

    def test_z2_passes(self, z2_ball, z2_fc):
        """Test ℤ² at radius 4 with margin 2."""
        run = cell_helly_verify(z2_ball, z2_fc, 2, max_family=3, seed=7, jobs=1)

        assert run.passed
        assert [c.condition for c in run.conditions] == [1, 2, 3]
        assert all(c.tested > 0 for c in run.conditions)
        assert run.conditions[0].skipped > 0
        assert set(run.cover_cases) == {1}

    def test_inner_cells(self, z2_ball, z2_fc):
        """Test that inner cells meet the ball of radius - margin."""
        run = cell_helly_verify(z2_ball, z2_fc, 2, max_family=2, seed=7, jobs=1)

        assert run.inner
        for i in run.inner:
            assert min(z2_ball.distance[v] for v in run.cells[i].vertex_set) <= 2

    def test_counts_at_small_radius(self, z2_fc):
        """Test tested and skipped counts of ℤ² at radius 2 with margin 2."""
        ball = build_ball(z2_fc, 2, choose_oracle(z2_fc))
        run = cell_helly_verify(ball, z2_fc, 2, max_family=3, seed=7, jobs=1)

        assert len(run.inner) == 9
        assert [(c.tested, c.skipped) for c in run.conditions] == [(24, 12), (48, 72), (4, 0)]
        assert run.verdict is Verdict.PASS
        assert set(run.cover_cases) == {1}

    def test_margin_too_small(self, z2_ball, z2_fc):
        """Test that a margin below the length of Δ is refused."""
        with pytest.raises(MarginTooSmall):
            cell_helly_verify(z2_ball, z2_fc, 0)

    def test_parallel_matches_serial(self, z2_ball, z2_fc):
        """Test that worker threads do not change the results."""
        serial = cell_helly_verify(z2_ball, z2_fc, 2, max_family=3, seed=7, jobs=1)
        threaded = cell_helly_verify(z2_ball, z2_fc, 2, max_family=3, seed=7, jobs=3)

        assert [c.model_dump() for c in serial.conditions] == [
            c.model_dump() for c in threaded.conditions
        ]
        assert serial.cover_cases == threaded.cover_cases

    def test_describe_cell(self, z2_ball, z2_fc):
        """Test the printed name of a cell."""
        run = cell_helly_verify(z2_ball, z2_fc, 2, max_family=2, seed=7, jobs=1)
        square = next(c for c in run.cells if c.source == 0 and c.dimension == 2)

        assert describe_cell(z2_ball, z2_fc, square) == "[1 ; {a,b}]"

    @pytest.mark.slow
    @pytest.mark.parametrize(
        "fixture, radius, margin",
        [("a2_fc", 6, 3), ("path_fc", 4, 3), ("a3_fc", 7, 6)],
    )
    def test_every_condition_is_tested(self, request, fixture, radius, margin):
        """Test larger balls where every condition keeps some families."""
        fc = request.getfixturevalue(fixture)
        ball = build_ball(fc, radius, choose_oracle(fc))
        run = cell_helly_verify(ball, fc, margin, max_family=3, seed=7, jobs=2)

        assert run.verdict is Verdict.PASS
        assert all(c.tested > 0 for c in run.conditions)

    def test_amalgam_oracle_is_used(self, path_fc):
        """Test that a –3– b –2– c falls back to the amalgam oracle."""
        assert isinstance(choose_oracle(path_fc), AmalgamOracle)


def condition(tested, skipped=0, violations=0):
    return ConditionReport(
        condition=1, name="pairs", tested=tested, skipped=skipped, violations=violations
    )


class TestCellHellyRun:
    """Test the verdict of a replay."""

    def test_pass(self):
        """Test a run where every condition tested something."""
        run = CellHellyRun(cells=[], inner=[], conditions=[condition(3), condition(1, 4)])

        assert run.verdict is Verdict.PASS
        assert run.passed

    def test_nothing_drawn_still_passes(self):
        """Test that a condition with no families at all is not vacuous."""
        run = CellHellyRun(cells=[], inner=[], conditions=[condition(3), condition(0)])

        assert run.verdict is Verdict.PASS

    def test_vacuous(self):
        """Test that a condition whose families were all skipped is vacuous."""
        run = CellHellyRun(cells=[], inner=[], conditions=[condition(3), condition(0, 5)])

        assert run.vacuous
        assert run.verdict is Verdict.VACUOUS
        assert not run.passed

    def test_failure_wins(self):
        """Test that a violation fails the run even when another condition is vacuous."""
        run = CellHellyRun(
            cells=[], inner=[], conditions=[condition(3, violations=1), condition(0, 5)]
        )

        assert run.verdict is Verdict.FAIL
