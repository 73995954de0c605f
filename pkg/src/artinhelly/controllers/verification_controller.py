from collections.abc import Callable
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from loguru import logger

from ..config.settings import settings
from ..coxeter.graph import load_graph
from ..formats.models import (
    GraphCheckReport,
    HellyCheckReport,
    OracleKind,
    Verdict,
    VerifyReport,
)
from ..hellygraph.checks import (
    ball_helly_check,
    clique_helly_check,
    helly_criterion_check,
)
from ..hellygraph.graph import load_edge_list
from ..salvetti.ball import CayleyBall, build_ball
from ..salvetti.cells import check_margin, thickening_neighbors
from ..salvetti.fc import FCGraph, certify_fc
from ..salvetti.oracles import choose_oracle
from ..salvetti.synthetic import check_synthetic, load_synthetic
from ..salvetti.verify import cell_helly_verify
from .callback_manager import CallbackManager


class Stage(str, Enum):
    CERTIFY = "certify"
    BALL = "ball"
    CONDITIONS = "conditions"
    THICKENING = "thickening"
    DONE = "done"


@dataclass(frozen=True)
class ProgressEvent:
    stage: Stage
    detail: str = ""


class VerificationController:
    """Runs the cell-Helly pipeline on a defining graph or a synthetic complex."""

    def __init__(
        self,
        max_family: int | None = None,
        max_radius: int | None = None,
        seed: int | None = None,
        jobs: int | None = None,
        cap: int | None = None,
    ) -> None:
        self.max_family = max_family if max_family is not None else settings.max_family
        self.max_radius = max_radius if max_radius is not None else settings.max_radius
        self.seed = seed if seed is not None else settings.seed
        self.jobs = jobs if jobs is not None else settings.jobs
        self.cap = cap if cap is not None else settings.enumeration_cap
        self._progress_callbacks = CallbackManager[ProgressEvent]()

    def add_progress_callback(self, callback: Callable[[ProgressEvent], None]) -> None:
        self._progress_callbacks.add(callback)

    def _progress(self, stage: Stage, detail: str = "") -> None:
        logger.debug(f"Stage {stage.value}: {detail}")
        self._progress_callbacks.notify(ProgressEvent(stage=stage, detail=detail))

    def verify_artin(
        self,
        path: Path | str,
        radius: int,
        margin: int,
        oracle_kind: OracleKind | None = None,
    ) -> VerifyReport:
        graph = load_graph(path)
        fc = certify_fc(graph, self.cap)
        check_margin(fc, margin)
        self._progress(Stage.CERTIFY, f"{len(fc.maximal_cliques)} maximal cliques")
        oracle = choose_oracle(fc, oracle_kind)
        ball = build_ball(fc, radius, oracle)
        self._progress(Stage.BALL, f"{len(ball)} vertices")
        run = cell_helly_verify(ball, fc, margin, self.max_family, self.seed, self.jobs)
        self._progress(Stage.CONDITIONS, f"{len(run.inner)} cells meeting the inner ball")
        helly = self._thickening_checks(ball, fc, margin)
        self._progress(Stage.THICKENING, ", ".join(h.check for h in helly))
        verdict = run.verdict
        if verdict is not Verdict.FAIL and not all(h.passed for h in helly):
            verdict = Verdict.FAIL
        elif verdict is Verdict.PASS and any(h.families_tested == 0 for h in helly):
            verdict = Verdict.VACUOUS
        cases = ", ".join(f"case {k}: {run.cover_cases[k]}" for k in sorted(run.cover_cases))
        report = VerifyReport(
            input=str(path),
            kind="artin",
            oracle=oracle.kind,
            radius=radius,
            margin=margin,
            seed=self.seed,
            max_family=self.max_family,
            vertices=len(ball),
            cells=len(run.cells),
            inner_cells=len(run.inner),
            conditions=run.conditions,
            thickening=helly,
            verdict=verdict,
            notes=[
                f"a family is tested when its pairwise intersections lie within "
                f"radius - margin = {radius - margin} of the identity, a triple of maximal "
                "cells when its common intersection meets that ball; skipped counts the "
                "swept families that do not",
                f"{len(run.cells) - len(run.inner)} cells lie wholly in the margin and "
                "join no family",
                f"triple covers by case: {cases or 'none'}",
            ],
        )
        self._progress(Stage.DONE, report.verdict.value)
        return report

    def _thickening_checks(
        self, ball: CayleyBall, fc: FCGraph, margin: int
    ) -> list[HellyCheckReport]:
        centers = [ball.keys[i] for i in ball.within(ball.radius - margin)]
        exact = thickening_neighbors(fc, ball.oracle)
        cliques = clique_helly_check(
            exact,
            self.max_family,
            centers=centers,
            label=ball.oracle.render,
            seed=self.seed,
            jobs=self.jobs,
        )
        balls = ball_helly_check(
            exact,
            centers,
            self.max_family,
            self.max_radius,
            label=ball.oracle.render,
            seed=self.seed,
            jobs=self.jobs,
        )
        return [cliques, balls]

    def verify_synthetic(self, path: Path | str) -> VerifyReport:
        complex_ = load_synthetic(path)
        self._progress(Stage.CERTIFY, f"{len(complex_.cells)} cells")
        conditions = check_synthetic(complex_, self.max_family, self.seed)
        self._progress(Stage.CONDITIONS, f"{len(complex_.maximal())} maximal cells")
        criterion = helly_criterion_check(
            complex_.cells, self.max_family, complex_.names, self.seed
        )
        self._progress(Stage.THICKENING, criterion.check)
        passed = all(c.violations == 0 for c in conditions) and criterion.passed
        report = VerifyReport(
            input=str(path),
            kind="synthetic",
            seed=self.seed,
            max_family=self.max_family,
            vertices=len(complex_.vertices),
            cells=len(complex_.cells),
            inner_cells=len(complex_.cells),
            conditions=conditions,
            thickening=[criterion],
            verdict=Verdict.PASS if passed else Verdict.FAIL,
            notes=["connectivity of intersections is taken in the 1-skeleton of 2-vertex cells"],
        )
        self._progress(Stage.DONE, report.verdict.value)
        return report

    def check_graph(self, path: Path | str, cliques: bool, balls: bool) -> GraphCheckReport:
        graph = load_edge_list(path)
        checks: list[HellyCheckReport] = []
        if cliques:
            checks.append(
                clique_helly_check(graph, self.max_family, seed=self.seed, jobs=self.jobs)
            )
        if balls:
            checks.append(
                ball_helly_check(
                    graph,
                    sorted(graph.vertices, key=str),
                    self.max_family,
                    self.max_radius,
                    seed=self.seed,
                    jobs=self.jobs,
                )
            )
        passed = all(h.passed for h in checks)
        self._progress(Stage.DONE, "pass" if passed else "fail")
        return GraphCheckReport(
            graph=str(path),
            vertices=len(graph.vertices),
            edges=len(graph.edges),
            checks=checks,
            verdict=Verdict.PASS if passed else Verdict.FAIL,
        )
