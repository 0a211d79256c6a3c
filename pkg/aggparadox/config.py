import logging
import os
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError

from aggparadox.errors import ConfigurationError

# Load environment variables
load_dotenv()

HARD_ISSUE_LIMIT = 24


class Settings(BaseModel):
    """Runtime knobs read from the environment (or a .env file)"""
    budget: int = Field(default=10_000_000, ge=1)
    max_issues: int = Field(default=16, ge=1, le=HARD_ISSUE_LIMIT)
    chunk_size: int = Field(default=65_536, ge=1)
    log_level: str = "WARNING"

    @classmethod
    def from_env(cls) -> "Settings":
        values = {}
        for field, variable in (
            ("budget", "AGG_BUDGET"),
            ("max_issues", "AGG_MAX_ISSUES"),
            ("chunk_size", "AGG_CHUNK_SIZE"),
            ("log_level", "AGG_LOG_LEVEL"),
        ):
            raw = os.getenv(variable)
            if raw is not None and raw.strip():
                values[field] = raw.strip()
        try:
            return cls(**values)
        except ValidationError as e:
            raise ConfigurationError(f"Invalid environment configuration: {e}") from e


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings.from_env()


def configure_logging(verbose: bool = False) -> None:
    level = logging.DEBUG if verbose else getattr(logging, get_settings().log_level.upper(), logging.WARNING)
    logging.basicConfig(
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
