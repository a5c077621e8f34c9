"""
pkcolor.settings
================

Configuration settings for pkcolor.

Defaults can be overridden via environment variables with the
``PKCOLOR_`` prefix (``PKCOLOR_SEARCH_BUDGET=1000000``) or a ``.env``
file in the working directory.
"""

from __future__ import annotations

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

# Identifier recorded in sampler output so runs can be reproduced.
PRNG_NAME = "numpy.random.PCG64"


class Settings(BaseSettings):
    """Pydantic model for pkcolor settings, loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="PKCOLOR_",
        env_file=".env",
        case_sensitive=False,
        extra="ignore",
    )

    # Search limits
    search_budget: int = Field(10**9, ge=1, description="Node limit for one exact search")
    verify_budget: int = Field(
        10**9, ge=1, description="Estimated/actual DFS steps allowed for one verification"
    )
    brute_force_limit: int = Field(
        10**8, ge=1, description="Maximum x**n assignments the brute-force oracle enumerates"
    )
    event_guard: int = Field(
        10**7, ge=1, description="Maximum estimated Type II events enumerate_bad_events accepts"
    )
    max_resamples: int = Field(10**4, ge=1, description="Default Moser-Tardos resample budget")

    # Output
    float_digits: int = Field(12, ge=1, le=17, description="Significant digits for reals in JSON")
    log_level: str = Field("WARNING", description="Root log level used by the CLI")
    jobs: int = Field(1, ge=1, description="Default worker count for batch mode")


# Initialize settings
settings = Settings()
