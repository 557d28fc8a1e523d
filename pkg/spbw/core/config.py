"""
Configuration loader with .env support.
Carregador de configuracao com suporte a .env.
"""

import os
from pathlib import Path
from dataclasses import dataclass
from typing import Optional

from .errors import ConfigError
from .guards import ResourceGuard

# Try loading dotenv, fallback if not installed
try:
    from dotenv import load_dotenv
    _HAS_DOTENV = True
except ImportError:
    _HAS_DOTENV = False


DEFAULT_MAX_BASIS = 200


@dataclass
class EngineConfig:
    """Engine configuration."""

    artifacts_dir: Path
    max_basis: Optional[int] = DEFAULT_MAX_BASIS
    max_degree: Optional[int] = None
    subset_cap: Optional[int] = None
    log_level: str = "INFO"

    def __post_init__(self):
        # Ensure artifacts_dir is a Path
        if isinstance(self.artifacts_dir, str):
            self.artifacts_dir = Path(self.artifacts_dir)
        for name in ("max_basis", "max_degree", "subset_cap"):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise ConfigError(f"{name} must be a positive integer, got {value}")

    def guard(self) -> ResourceGuard:
        """Resource guard built from the configured limits."""
        return ResourceGuard(max_basis=self.max_basis, max_degree=self.max_degree)


def _optional_int(name: str, raw: Optional[str], default: Optional[int]) -> Optional[int]:
    if raw is None:
        return default
    raw = raw.strip()
    if raw == "" or raw.lower() == "none":
        return None
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer or 'none', got {raw!r}") from None


def get_config(env_path: Optional[str] = None) -> EngineConfig:
    """
    Loads configuration from environment variables.

    Loads .env file if python-dotenv is installed.

    Args:
        env_path: Optional path to .env file. Default: .env in cwd.

    Returns:
        EngineConfig with loaded values.
    """
    # Load .env if available
    if _HAS_DOTENV:
        env_file = Path(env_path) if env_path else Path(".env")
        if env_file.exists():
            load_dotenv(env_file)

    artifacts_dir = os.getenv("SPBW_ARTIFACTS_DIR", "./artifacts")

    return EngineConfig(
        artifacts_dir=Path(artifacts_dir),
        max_basis=_optional_int("SPBW_MAX_BASIS", os.getenv("SPBW_MAX_BASIS"), DEFAULT_MAX_BASIS),
        max_degree=_optional_int("SPBW_MAX_DEGREE", os.getenv("SPBW_MAX_DEGREE"), None),
        subset_cap=_optional_int("SPBW_SUBSET_CAP", os.getenv("SPBW_SUBSET_CAP"), None),
        log_level=os.getenv("SPBW_LOG_LEVEL", "INFO").upper(),
    )
