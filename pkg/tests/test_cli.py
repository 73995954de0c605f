"""Tests for the command-line interface."""

import json

import pytest

from artinhelly.cli import Command, build_parser, run
from artinhelly.cli.main import config_from_args
from artinhelly.formats.models import ConditionReport
from artinhelly.salvetti.verify import CellHellyRun

CYCLIC_NERVE = {
    "vertices": ["a", "b", "c", "d"],
    "edges": [["a", "b", 3], ["b", "c", 2], ["c", "d", 2], ["d", "a", 2]],
}


def run_json(argv, capsys):
    code = run(argv)
    out = capsys.readouterr().out
    return code, json.loads(out) if out else None


class TestParser:
    """Test argument parsing into a run configuration."""

    def test_graph_check_defaults_to_both(self, data_dir):
        """Test that graph check runs both sweeps without flags."""
        args = build_parser().parse_args(["graph", "check", str(data_dir / "c4.txt")])
        config = config_from_args(args)

        assert config.command is Command.GRAPH_CHECK
        assert config.cliques and config.balls

    def test_garside_split(self, data_dir):
        """Test splitting a graph file from the operation."""
        args = build_parser().parse_args(["garside", str(data_dir / "a2.json"), "meet", "a", "b"])
        config = config_from_args(args)

        assert config.garside_op == "meet"
        assert config.words == ["a", "b"]

    def test_version(self):
        """Test --version exits cleanly."""
        with pytest.raises(SystemExit) as exit_info:
            build_parser().parse_args(["--version"])

        assert exit_info.value.code == 0


class TestCoxeterCommand:
    """Test the coxeter command."""

    def test_a2(self, data_dir, capsys):
        """Test the summary and the report of A_2."""
        code = run(["coxeter", str(data_dir / "a2.json")])
        captured = capsys.readouterr()
        report = json.loads(captured.out)

        assert code == 0
        assert "order=6, longest length=3, lattice=ok" in captured.err
        assert report["longest_element"] == "aba"
        assert report["coset_helly"] == "ok"

    def test_infinite(self, data_dir, capsys):
        """Test that an infinite group is out of scope."""
        code = run(["coxeter", str(data_dir / "infinite_edge.json")])

        assert code == 2
        assert "not finite within cap=10000" in capsys.readouterr().err

    def test_empty_graph(self, data_dir):
        """Test that a graph without vertices is an input error."""
        assert run(["coxeter", str(data_dir / "empty.json"), "--quiet"]) == 1

    def test_dot(self, data_dir, tmp_path, capsys):
        """Test the DOT export of the oriented cell."""
        dot = tmp_path / "cell.dot"

        assert run(["coxeter", str(data_dir / "b2.json"), "--dot", str(dot), "--quiet"]) == 0
        assert dot.read_text(encoding="utf-8").startswith("digraph")


class TestGarsideCommand:
    """Test the garside command."""

    def test_normal_form(self, data_dir, capsys):
        """Test the normal form of bab is Δ."""
        code, report = run_json(["garside", str(data_dir / "a2.json"), "nf", "b a b"], capsys)

        assert code == 0
        assert report["result"] == "Δ^1"
        assert report["power"] == 1

    def test_inverse_cancels(self, data_dir, capsys):
        """Test that a a⁻¹ is the identity."""
        code, report = run_json(["garside", str(data_dir / "a2.json"), "nf", "a a⁻¹"], capsys)

        assert code == 0
        assert report["power"] == 0
        assert report["tail"] == []

    def test_join(self, data_dir, capsys):
        """Test a ∨ b = Δ."""
        code, report = run_json(["garside", str(data_dir / "a2.json"), "join", "a", "b"], capsys)

        assert code == 0
        assert report["result"] == "Δ^1"

    def test_cover_with_structure_file(self, data_dir, capsys):
        """Test the cover certificate from a structure file."""
        argv = [
            "garside",
            "--structure",
            str(data_dir / "braid3_structure.json"),
            "cover",
            "1",
            "a",
            "b",
        ]
        code, report = run_json(argv, capsys)

        assert code == 0
        assert len(report["certificate"]) == 3
        assert all("⊆ cover" in line for line in report["certificate"])

    def test_meet_needs_two_words(self, data_dir):
        """Test that meet with one word is an input error."""
        assert run(["garside", str(data_dir / "a2.json"), "meet", "a", "--quiet"]) == 1

    def test_affine_graph(self, data_dir):
        """Test that a non-spherical graph is out of scope."""
        assert run(["garside", str(data_dir / "triangle333.json"), "nf", "a", "--quiet"]) == 2

    def test_unknown_atom(self, data_dir):
        """Test that an unknown atom is an input error."""
        assert run(["garside", str(data_dir / "a2.json"), "nf", "z", "--quiet"]) == 1


class TestBallCommand:
    """Test the ball command."""

    def test_z(self, data_dir, capsys):
        """Test the ball of radius 2 in ℤ."""
        code, report = run_json(["ball", str(data_dir / "z.json"), "--radius", "2"], capsys)

        assert code == 0
        assert report["vertex_count"] == 5
        assert report["oracle"] == "right-angled"

    def test_no_vertices(self, data_dir, capsys):
        """Test omitting the vertex list."""
        argv = ["ball", str(data_dir / "z2.json"), "--radius", "1", "--no-vertices"]
        code, report = run_json(argv, capsys)

        assert code == 0
        assert report["vertices"] == []


class TestVerifyCommand:
    """Test the verify command."""

    def test_z2_passes(self, data_dir, capsys):
        """Test ℤ² passes."""
        argv = [
            "verify",
            str(data_dir / "z2.json"),
            "--radius",
            "4",
            "--margin",
            "2",
            "--max-family",
            "3",
            "--max-radius",
            "1",
        ]
        code, report = run_json(argv, capsys)

        assert code == 0
        assert report["verdict"] == "pass"

    @pytest.mark.parametrize("margin", ["0", "5"])
    def test_bad_margin(self, data_dir, margin):
        """Test margins below Δ and beyond the radius."""
        argv = ["verify", str(data_dir / "z2.json"), "--radius", "4", "--margin", margin]

        assert run(argv + ["--quiet"]) == 1

    def test_cube_fails(self, data_dir, capsys):
        """Test that a failing complex exits with the verification code."""
        code, report = run_json(["verify", str(data_dir / "cube_skeleton.json")], capsys)

        assert code == 4
        assert report["kind"] == "synthetic"

    def test_not_fc(self, data_dir):
        """Test that the affine triangle is out of scope."""
        assert run(["verify", str(data_dir / "triangle333.json"), "--quiet"]) == 2

    def test_cyclic_nerve(self, tmp_path):
        """Test that a cycle of cliques has no oracle."""
        path = tmp_path / "cycle.json"
        path.write_text(json.dumps(CYCLIC_NERVE), encoding="utf-8")

        argv = ["verify", str(path), "--radius", "4", "--margin", "3", "--quiet"]
        assert run(argv) == 3

    def test_forced_oracle(self, data_dir):
        """Test forcing the right-angled oracle on a label 3."""
        argv = ["verify", str(data_dir / "a2.json"), "--oracle", "right-angled", "--quiet"]

        assert run(argv) == 3

    def test_deterministic_output(self, data_dir, tmp_path):
        """Test that two runs write identical reports."""
        outputs = [tmp_path / "first.json", tmp_path / "second.json"]
        for output in outputs:
            argv = [
                "verify",
                str(data_dir / "z2.json"),
                "--radius",
                "3",
                "--margin",
                "2",
                "--jobs",
                "2",
                "-o",
                str(output),
                "--quiet",
            ]
            assert run(argv) == 0

        assert outputs[0].read_text(encoding="utf-8") == outputs[1].read_text(encoding="utf-8")


    def test_progress_is_logged(self, data_dir, mocker):
        """Test that each stage reaches the progress log."""
        listener = mocker.patch("artinhelly.cli.main.log_progress")
        argv = ["verify", str(data_dir / "z.json"), "--radius", "3", "--margin", "1", "--quiet"]

        assert run(argv) == 0

        stages = [c.args[0].stage.value for c in listener.call_args_list]
        assert stages == ["certify", "ball", "conditions", "thickening", "done"]

    def test_vacuous_exits_with_verification_code(self, data_dir, capsys, mocker):
        """Test that a run whose families all reach the margin does not pass."""
        skipped = ConditionReport(condition=1, name="pairs", tested=0, skipped=6)
        mocker.patch(
            "artinhelly.controllers.verification_controller.cell_helly_verify",
            return_value=CellHellyRun(cells=[], inner=[], conditions=[skipped]),
        )
        argv = ["verify", str(data_dir / "z.json"), "--radius", "3", "--margin", "1"]
        code, report = run_json(argv, capsys)

        assert code == 4
        assert report["verdict"] == "vacuous"


class TestGraphCheckCommand:
    """Test the graph check command."""

    def test_c4_balls(self, data_dir):
        """Test that C_4 fails the ball sweep."""
        assert run(["graph", "check", str(data_dir / "c4.txt"), "--balls", "--quiet"]) == 4

    def test_octahedron_cliques(self, data_dir, tmp_path):
        """Test that the octahedron passes the clique sweep and exports DOT."""
        dot = tmp_path / "octahedron.dot"
        argv = [
            "graph",
            "check",
            str(data_dir / "octahedron.txt"),
            "--cliques",
            "--dot",
            str(dot),
            "--quiet",
        ]

        assert run(argv) == 0
        assert dot.read_text(encoding="utf-8").startswith("graph")

    def test_unknown_command(self):
        """Test that usage errors are input errors."""
        assert run(["frobnicate"]) == 1
