"""spbw core utilities."""

from .config import EngineConfig, get_config
from .artifacts import create_run_dirs, generate_run_id, write_meta, write_report
from .log import get_logger
from .guards import ResourceGuard, UNLIMITED
from .errors import (
    SpbwError,
    InputError,
    MathematicalFailure,
    ResourceGuardExceeded,
)

__all__ = [
    "EngineConfig",
    "get_config",
    "create_run_dirs",
    "generate_run_id",
    "write_meta",
    "write_report",
    "get_logger",
    "ResourceGuard",
    "UNLIMITED",
    "SpbwError",
    "InputError",
    "MathematicalFailure",
    "ResourceGuardExceeded",
]
