"""Environment-driven defaults.

Values are read from the process environment, after loading an optional
``.env`` file from the working directory.
"""

import os
from dataclasses import dataclass
from typing import Callable, TypeVar

from dotenv import find_dotenv, load_dotenv

T = TypeVar("T")


@dataclass(frozen=True)
class Settings:
    """Package defaults that can be overridden from the environment."""

    eps_predicate: float = 1e-9
    eps_geometry: float = 1e-7
    seed: int = 0
    retry_budget: int = 10_000
    log_level: str = "WARNING"


def _read(name: str, default: T, cast: Callable[[str], T]) -> T:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return cast(raw.strip())
    except ValueError:
        raise ValueError(f"Invalid value for {name}: {raw!r}")


def get_settings() -> Settings:
    """Build settings from ``SPIKYBALL_*`` environment variables."""
    load_dotenv(find_dotenv(usecwd=True))
    defaults = Settings()
    settings = Settings(
        eps_predicate=_read(
            "SPIKYBALL_EPS_PREDICATE", defaults.eps_predicate, float
        ),
        eps_geometry=_read("SPIKYBALL_EPS_GEOMETRY", defaults.eps_geometry, float),
        seed=_read("SPIKYBALL_SEED", defaults.seed, int),
        retry_budget=_read("SPIKYBALL_RETRY_BUDGET", defaults.retry_budget, int),
        log_level=_read("SPIKYBALL_LOG_LEVEL", defaults.log_level, str).upper(),
    )
    if settings.retry_budget < 1:
        raise ValueError(
            f"Invalid value for SPIKYBALL_RETRY_BUDGET: {settings.retry_budget}"
        )
    return settings


def default_tolerance():
    """Tolerance built from the current settings."""
    from spikyball.geometry.types import Tolerance

    settings = get_settings()
    return Tolerance(
        eps_predicate=settings.eps_predicate, eps_geometry=settings.eps_geometry
    )
