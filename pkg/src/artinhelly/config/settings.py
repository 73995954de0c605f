from pathlib import Path

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="ARTINHELLY_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
    )

    enumeration_cap: int = Field(default=10000)
    root_tolerance: float = Field(default=1e-9)
    matrix_decimals: int = Field(default=6)
    associativity_samples: int = Field(default=200)
    closure_cap: int = Field(default=1_000_000)
    default_radius: int = Field(default=4)
    default_margin: int = Field(default=3)
    max_family: int = Field(default=4)
    max_radius: int = Field(default=2)
    seed: int = Field(default=20190406)
    jobs: int = Field(default=1)
    sweep_samples: int = Field(default=400)
    exhaustive_limit: int = Field(default=20000)
    log_level: str = Field(default="INFO")
    log_to_file: bool = Field(default=False)
    log_retention_days: int = Field(default=30)

    @property
    def log_directory(self) -> Path:
        return Path.home() / ".artinhelly" / "logs"

    @property
    def config_directory(self) -> Path:
        return Path.home() / ".artinhelly" / "config"


settings = Settings()
