"""
Configuration - cmdef_lab
Environment-driven settings (prefix CMDEF_LAB_) with .env support
"""

import logging
from functools import lru_cache
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

logger = logging.getLogger(__name__)

# Load environment variables
load_dotenv()


class Settings(BaseSettings):
    """Runtime settings for the algebra kernel, the pipelines and the CLI"""

    model_config = SettingsConfigDict(env_prefix="CMDEF_LAB_", env_file=".env", extra="ignore")

    cache_dir: Path = Field(default_factory=lambda: Path.home() / ".cache" / "cmdef_lab")
    use_cache: bool = True
    time_budget: Optional[float] = None
    tensor_basis_warn_bound: int = 64
    relation_degree_bound: int = 12
    log_level: str = "INFO"
    run_slow: bool = False

    @field_validator("time_budget")
    @classmethod
    def _positive_budget(cls, value: Optional[float]) -> Optional[float]:
        if value is not None and value <= 0:
            raise ValueError("time_budget must be positive")
        return value

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        level = value.upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ValueError(f"unknown log level {value!r}")
        return level


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """
    Build the settings once per process

    Returns:
        Settings populated from the environment and an optional .env file
    """
    current = Settings()
    logger.debug(f"⚙️ [CONFIG] cache_dir={current.cache_dir} use_cache={current.use_cache}")
    return current


# Global settings instance
settings = get_settings()
