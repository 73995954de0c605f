from .config import Command, RunConfig
from .main import build_parser, run

__all__ = ["Command", "RunConfig", "build_parser", "run"]
