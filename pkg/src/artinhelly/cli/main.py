import argparse
import sys
from collections.abc import Callable
from pathlib import Path
from typing import Literal, NoReturn

from loguru import logger
from pydantic import BaseModel

from ..controllers.verification_controller import ProgressEvent, VerificationController
from ..coxeter.cell import oriented_coxeter_cell, to_dot
from ..coxeter.graph import load_graph
from ..coxeter.group import enumerate_group, longest_element
from ..coxeter.parabolic import check_coset_helly
from ..coxeter.weak_order import Side, check_lattice
from ..errors import ArtinHellyError, ExitCode, InputError
from ..formats.models import (
    BallReport,
    CoxeterReport,
    GarsideReport,
    GraphCheckReport,
    OracleKind,
    Verdict,
    VerifyReport,
)
from ..garside.cells import (
    GCell,
    cell_intersection,
    cell_member,
    cell_of,
    interval_vertices,
    triple_cell_cover,
)
from ..garside.lattice import join_p, meet_p
from ..garside.loader import structure_from_file
from ..garside.normal_form import GrpElt, normal_form, parse_word, render
from ..garside.structure import GarsideStructure, garside_from_spherical
from ..hellygraph.graph import load_edge_list
from ..logging_config import setup_logging
from ..salvetti.ball import build_ball
from ..salvetti.cells import cells_in_ball
from ..salvetti.export import ball_report, ball_to_dot
from ..salvetti.fc import certify_fc
from ..salvetti.oracles import choose_oracle
from ..salvetti.synthetic import is_synthetic_file
from ..version import __version__
from .config import Command, RunConfig

GARSIDE_OPS = ("nf", "meet", "join", "cover")
COSET_HELLY_LIMIT = 200


class _Parser(argparse.ArgumentParser):
    """Usage errors become InputError so they exit with the input-error code."""

    def error(self, message: str) -> NoReturn:
        raise InputError(f"{self.prog}: {message}")


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", type=Path, help="write the JSON report here")
    common.add_argument("--dot", type=Path, help="also export a DOT file")
    common.add_argument("--quiet", action="store_true", help="no summary on stderr")
    common.add_argument("--log-file", action="store_true", help="also log to a file")
    common.add_argument("--cap", type=int, help="enumeration cap for Coxeter groups")
    return common


def _sweep_options() -> argparse.ArgumentParser:
    sweep = argparse.ArgumentParser(add_help=False)
    sweep.add_argument("--max-family", type=int)
    sweep.add_argument("--max-radius", type=int)
    sweep.add_argument("--seed", type=int)
    sweep.add_argument("--jobs", type=int)
    return sweep


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="artinhelly",
        description="Cell-Helly verification for FC-type Artin groups",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = _common_options()
    sweep = _sweep_options()
    commands = parser.add_subparsers(dest="command", required=True)

    coxeter = commands.add_parser(
        "coxeter", parents=[common], help="enumerate a spherical Coxeter group"
    )
    coxeter.add_argument("input", type=Path)

    garside = commands.add_parser(
        "garside", parents=[common], help="normal forms, lattice operations, cell covers"
    )
    garside.add_argument(
        "arguments",
        nargs="+",
        metavar="[graph.json] {nf,meet,join,cover} word",
    )
    garside.add_argument("--structure", type=Path, help="Garside structure JSON file")

    ball = commands.add_parser(
        "ball", parents=[common], help="dump a ball of the Salvetti complex"
    )
    ball.add_argument("input", type=Path)
    ball.add_argument("--radius", type=int)
    ball.add_argument("--oracle", type=OracleKind)
    ball.add_argument("--no-vertices", action="store_true", help="omit the vertex list")

    verify = commands.add_parser(
        "verify",
        parents=[common, sweep],
        help="replay the cell-Helly conditions on a graph or synthetic complex",
    )
    verify.add_argument("input", type=Path)
    verify.add_argument("--radius", type=int)
    verify.add_argument("--margin", type=int)
    verify.add_argument("--oracle", type=OracleKind)

    graph = commands.add_parser("graph", help="Helly checks on explicit graphs")
    graph_commands = graph.add_subparsers(dest="graph_command", required=True)
    check = graph_commands.add_parser(
        "check", parents=[common, sweep], help="clique-Helly and ball-Helly sweeps"
    )
    check.add_argument("input", type=Path)
    check.add_argument("--cliques", action="store_true")
    check.add_argument("--balls", action="store_true")
    return parser


def _split_garside(arguments: list[str]) -> tuple[Path | None, str, list[str]]:
    if arguments[0] in GARSIDE_OPS:
        return None, arguments[0], arguments[1:]
    if len(arguments) < 2 or arguments[1] not in GARSIDE_OPS:
        raise InputError(f"expected one of {', '.join(GARSIDE_OPS)} after the graph file")
    return Path(arguments[0]), arguments[1], arguments[2:]


def config_from_args(args: argparse.Namespace) -> RunConfig:
    values = dict(vars(args))
    if values.pop("command") == "graph":
        values.pop("graph_command")
        command = Command.GRAPH_CHECK
        if not values["cliques"] and not values["balls"]:
            values["cliques"] = values["balls"] = True
    else:
        command = Command(args.command)
    if command is Command.GARSIDE:
        values["input"], values["garside_op"], values["words"] = _split_garside(
            values.pop("arguments")
        )
    values["with_vertices"] = not values.pop("no_vertices", False)
    values.pop("log_file", None)
    return RunConfig.from_values(command=command, **values)


def cmd_coxeter(config: RunConfig) -> CoxeterReport:
    assert config.input is not None
    graph = load_graph(config.input)
    group = enumerate_group(graph, config.cap)
    longest = longest_element(group)
    violations = [
        f"{side.value}: {v}" for side in Side for v in check_lattice(group, side)
    ]
    coset_helly: Literal["ok", "fail"] | None = None
    if group.order <= COSET_HELLY_LIMIT:
        coset_helly = "fail" if check_coset_helly(group).violations else "ok"
    else:
        logger.info(f"Skipping the coset Helly check for order {group.order}")
    if config.dot is not None:
        config.dot.write_text(to_dot(oriented_coxeter_cell(group)), encoding="utf-8")
    return CoxeterReport(
        vertices=list(graph.vertices),
        order=group.order,
        longest_element=group.render(longest),
        longest_length=longest.length,
        lattice="fail" if violations else "ok",
        lattice_violations=violations,
        coset_helly=coset_helly,
    )


def _structure(config: RunConfig) -> GarsideStructure:
    if config.structure is not None:
        return structure_from_file(config.structure)
    assert config.input is not None
    return garside_from_spherical(enumerate_group(load_graph(config.input), config.cap))


def _cover_certificate(
    gs: GarsideStructure, cells: tuple[GCell, GCell, GCell], cover: GCell
) -> list[str]:
    lines = []
    for i, j in ((0, 1), (1, 2), (2, 0)):
        shared = cell_intersection(gs, cells[i], cells[j])
        assert shared is not None
        inside = all(
            cell_member(gs, cover, x) for x in interval_vertices(gs, shared, cells[i])
        )
        lines.append(
            f"C{i + 1} ∩ C{j + 1} = [{render(gs, shared.low)}, {render(gs, shared.high)}]"
            f" {'⊆' if inside else '⊄'} cover"
        )
    return lines


def cmd_garside(config: RunConfig) -> GarsideReport:
    gs = _structure(config)
    elements = [normal_form(gs, parse_word(gs, w)) for w in config.words]
    certificate: list[str] = []
    result: GrpElt
    if config.garside_op == "nf":
        result = elements[0]
    elif config.garside_op == "meet":
        result = meet_p(gs, *elements)
    elif config.garside_op == "join":
        result = join_p(gs, *elements)
    else:
        cells = (cell_of(gs, elements[0]), cell_of(gs, elements[1]), cell_of(gs, elements[2]))
        cover = triple_cell_cover(gs, *cells)
        result = cover.base
        certificate = _cover_certificate(gs, cells, cover)
    assert config.garside_op is not None
    return GarsideReport(
        command=config.garside_op,
        inputs=config.words,
        result=render(gs, result),
        power=result.power,
        tail=[gs.names[f] for f in result.tail],
        certificate=certificate,
    )


def cmd_ball(config: RunConfig) -> BallReport:
    assert config.input is not None
    fc = certify_fc(load_graph(config.input), config.cap)
    ball = build_ball(fc, config.radius, choose_oracle(fc, config.oracle))
    cells = cells_in_ball(ball, fc)
    if config.dot is not None:
        config.dot.write_text(ball_to_dot(ball, fc, cells), encoding="utf-8")
    return ball_report(ball, cells, with_vertices=config.with_vertices)


def log_progress(event: ProgressEvent) -> None:
    logger.info(f"{event.stage.value.capitalize()}: {event.detail}")


def _controller(config: RunConfig) -> VerificationController:
    controller = VerificationController(
        max_family=config.max_family,
        max_radius=config.max_radius,
        seed=config.seed,
        jobs=config.jobs,
        cap=config.cap,
    )
    controller.add_progress_callback(log_progress)
    return controller


def cmd_verify(config: RunConfig) -> VerifyReport:
    assert config.input is not None
    controller = _controller(config)
    if is_synthetic_file(config.input):
        return controller.verify_synthetic(config.input)
    return controller.verify_artin(config.input, config.radius, config.margin, config.oracle)


def cmd_graph_check(config: RunConfig) -> GraphCheckReport:
    assert config.input is not None
    report = _controller(config).check_graph(config.input, config.cliques, config.balls)
    if config.dot is not None:
        config.dot.write_text(load_edge_list(config.input).to_dot(), encoding="utf-8")
    return report


COMMANDS: dict[Command, Callable[[RunConfig], BaseModel]] = {
    Command.COXETER: cmd_coxeter,
    Command.GARSIDE: cmd_garside,
    Command.BALL: cmd_ball,
    Command.VERIFY: cmd_verify,
    Command.GRAPH_CHECK: cmd_graph_check,
}


def _emit(report: BaseModel, config: RunConfig) -> None:
    text = report.model_dump_json(indent=2) + "\n"
    if config.output is not None:
        config.output.write_text(text, encoding="utf-8")
        logger.info(f"Report written to {config.output}")
    else:
        sys.stdout.write(text)
    summary = getattr(report, "summary", None)
    if summary is not None and not config.quiet:
        sys.stderr.write(summary() + "\n")


def run(argv: list[str] | None = None) -> int:
    quiet = "--quiet" in (argv if argv is not None else sys.argv[1:])
    setup_logging(quiet=quiet)
    try:
        args = build_parser().parse_args(argv)
        if args.log_file:
            setup_logging(quiet=quiet, log_to_file=True)
        config = config_from_args(args)
        logger.debug(f"Running {config.command.value} on {config.input}")
        report = COMMANDS[config.command](config)
        _emit(report, config)
    except ArtinHellyError as e:
        logger.error(f"{e.code.value}: {e.message}")
        return e.exit_code
    verdict = getattr(report, "verdict", Verdict.PASS)
    return ExitCode.OK if verdict is Verdict.PASS else ExitCode.VERIFICATION_FAILED
