from enum import Enum
from typing import Literal

from pydantic import BaseModel, Field, field_validator


class Verdict(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    VACUOUS = "vacuous"


class OracleKind(str, Enum):
    SPHERICAL = "spherical-garside"
    RIGHT_ANGLED = "right-angled"
    AMALGAM = "tree-of-cliques-amalgam"
    TRIVIAL = "trivial"


class GarsideStructureFile(BaseModel):
    simples: list[str]
    atoms: list[str]
    delta: str
    product: list[tuple[int, int, int]] = Field(default_factory=list)

    @field_validator("simples")
    @classmethod
    def _non_empty(cls, value: list[str]) -> list[str]:
        if not value:
            raise ValueError("a Garside structure needs at least the identity")
        return value


class SyntheticCell(BaseModel):
    name: str
    vertices: list[str]

    @field_validator("vertices")
    @classmethod
    def _non_empty(cls, value: list[str]) -> list[str]:
        if not value:
            raise ValueError("a cell needs at least one vertex")
        return value


class SyntheticComplexFile(BaseModel):
    cells: list[SyntheticCell]

    @field_validator("cells")
    @classmethod
    def _unique_names(cls, value: list[SyntheticCell]) -> list[SyntheticCell]:
        names = [c.name for c in value]
        if len(set(names)) != len(names):
            raise ValueError("cell names must be unique")
        return value


class ConditionReport(BaseModel):
    condition: int
    name: str
    tested: int = 0
    skipped: int = 0
    sampled: bool = False
    violations: int = 0
    counterexamples: list[list[str]] = Field(default_factory=list)


class HellyCheckReport(BaseModel):
    check: Literal["clique", "ball", "criterion"]
    families_tested: int = 0
    sampled: bool = False
    max_family: int
    max_radius: int | None = None
    passed: bool = True
    counterexample: list[list[str]] | None = None
    note: str = ""


class VerifyReport(BaseModel):
    input: str
    kind: Literal["artin", "synthetic"]
    oracle: OracleKind | None = None
    radius: int | None = None
    margin: int | None = None
    seed: int
    max_family: int
    vertices: int
    cells: int
    inner_cells: int
    conditions: list[ConditionReport]
    thickening: list[HellyCheckReport] = Field(default_factory=list)
    verdict: Verdict
    notes: list[str] = Field(default_factory=list)

    def summary(self) -> str:
        parts = [f"{c.name}: {c.tested} tested, {c.skipped} skipped, {c.violations} violations"
                 for c in self.conditions]
        parts.extend(
            f"{h.check} Helly: {'pass' if h.passed else 'fail'} ({h.families_tested} families)"
            for h in self.thickening
        )
        return f"verdict={self.verdict.value}; " + "; ".join(parts)


class CoxeterReport(BaseModel):
    vertices: list[str]
    order: int
    longest_element: str
    longest_length: int
    lattice: Literal["ok", "fail"]
    lattice_violations: list[str] = Field(default_factory=list)
    coset_helly: Literal["ok", "fail"] | None = None

    def summary(self) -> str:
        return f"order={self.order}, longest length={self.longest_length}, lattice={self.lattice}"


class GarsideReport(BaseModel):
    command: Literal["nf", "meet", "join", "cover"]
    inputs: list[str]
    result: str
    power: int
    tail: list[str]
    certificate: list[str] = Field(default_factory=list)

    def summary(self) -> str:
        return self.result


class BallVertex(BaseModel):
    word: str
    distance: int


class BallReport(BaseModel):
    oracle: OracleKind
    radius: int
    vertex_count: int
    edge_count: int
    distance_counts: dict[str, int]
    cells_by_dimension: dict[str, int]
    vertices: list[BallVertex]

    def summary(self) -> str:
        return f"radius={self.radius}, vertices={self.vertex_count}, edges={self.edge_count}"


class GraphCheckReport(BaseModel):
    graph: str
    vertices: int
    edges: int
    checks: list[HellyCheckReport]
    verdict: Verdict
    notes: list[str] = Field(default_factory=list)

    def summary(self) -> str:
        return f"verdict={self.verdict.value}; " + "; ".join(
            f"{h.check} Helly: {'pass' if h.passed else 'fail'}" for h in self.checks
        )
