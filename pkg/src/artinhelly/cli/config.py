from enum import Enum
from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..config.settings import settings
from ..errors import InputError
from ..formats.models import OracleKind

GarsideOp = Literal["nf", "meet", "join", "cover"]

_WORD_COUNTS: dict[str, tuple[int, int | None]] = {
    "nf": (1, 1),
    "meet": (2, None),
    "join": (2, None),
    "cover": (3, 3),
}


class Command(str, Enum):
    COXETER = "coxeter"
    GARSIDE = "garside"
    BALL = "ball"
    VERIFY = "verify"
    GRAPH_CHECK = "graph-check"


class RunConfig(BaseModel):
    """One CLI invocation, validated before anything is computed."""

    model_config = ConfigDict(frozen=True)

    command: Command
    input: Path | None = None
    radius: int = Field(default_factory=lambda: settings.default_radius, ge=0)
    margin: int = Field(default_factory=lambda: settings.default_margin, ge=0)
    cap: int = Field(default_factory=lambda: settings.enumeration_cap, ge=1)
    max_family: int = Field(default_factory=lambda: settings.max_family, ge=2)
    max_radius: int = Field(default_factory=lambda: settings.max_radius, ge=1)
    seed: int = Field(default_factory=lambda: settings.seed, ge=0)
    jobs: int = Field(default_factory=lambda: settings.jobs, ge=1)
    oracle: OracleKind | None = None
    output: Path | None = None
    dot: Path | None = None
    quiet: bool = False
    garside_op: GarsideOp | None = None
    words: list[str] = Field(default_factory=list)
    structure: Path | None = None
    cliques: bool = False
    balls: bool = False
    with_vertices: bool = True

    @model_validator(mode="after")
    def _consistent(self) -> "RunConfig":
        if self.command is not Command.GARSIDE and self.input is None:
            raise ValueError(f"{self.command.value} needs an input file")
        if self.command is Command.VERIFY and self.margin > self.radius:
            raise ValueError(f"margin {self.margin} exceeds radius {self.radius}")
        if self.command is Command.GARSIDE:
            if self.input is None and self.structure is None:
                raise ValueError("garside needs a graph file or --structure")
            if self.garside_op is None:
                raise ValueError("garside needs one of nf, meet, join, cover")
            low, high = _WORD_COUNTS[self.garside_op]
            if len(self.words) < low or (high is not None and len(self.words) > high):
                expected = str(low) if low == high else f"at least {low}"
                raise ValueError(
                    f"{self.garside_op} takes {expected} words, got {len(self.words)}"
                )
        return self

    @classmethod
    def from_values(cls, **values: Any) -> "RunConfig":
        """Drop unset values so the settings defaults apply."""
        present = {k: v for k, v in values.items() if v is not None}
        try:
            return cls(**present)
        except ValueError as e:
            raise InputError(f"invalid arguments: {e}") from e
