import os
import logging
from functools import lru_cache
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv
from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

load_dotenv()


class Settings(BaseSettings):
    """
    Runtime configuration, read from ``DLMKIT_*`` environment variables (or a ``.env`` file).

    CLI flags override individual fields through ``model_copy(update=...)``.
    """

    model_config = SettingsConfigDict(env_prefix="DLMKIT_", env_file=".env", extra="ignore")

    cache_dir: Path = Path.home() / ".cache" / "dlmkit"
    use_cache: bool = True
    workers: int = os.cpu_count() or 1
    log_level: str = "INFO"
    log_file: Optional[Path] = None
    # isolating intervals are refined to width 2**-interval_bits
    interval_bits: int = 40
    # cross-spectrum comparisons stop refining at 2**-compare_cap_bits
    compare_cap_bits: int = 80
    numeric_tolerance: float = 1e-7
    max_enumeration_n: int = 9

    @field_validator("workers")
    @classmethod
    def validate_workers(cls, v: int) -> int:
        if v < 1:
            raise ValueError("workers must be at least 1")
        return v

    @field_validator("interval_bits", "compare_cap_bits")
    @classmethod
    def validate_bits(cls, v: int) -> int:
        if not 8 <= v <= 200:
            raise ValueError("interval precision must be between 8 and 200 bits")
        return v

    @field_validator("max_enumeration_n")
    @classmethod
    def validate_max_n(cls, v: int) -> int:
        if not 2 <= v <= 10:
            raise ValueError("max_enumeration_n must be between 2 and 10")
        return v

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        level = v.strip().upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ValueError(f"Unknown log level: {v}")
        return level


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings()


def setup_logging(level: str = "INFO", log_file: Optional[Path] = None) -> None:
    """
    Configure root logging for command-line runs.

    Args:
        level: Logging level name
        log_file: Optional file that receives a copy of every record; its directory is created
    """
    handlers: list[logging.Handler] = [logging.StreamHandler()]
    if log_file is not None:
        log_path = Path(log_file)
        log_path.parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(log_path))

    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=handlers,
        force=True,
    )
    logging.getLogger(__name__).debug("Logging initialized at %s", level)
