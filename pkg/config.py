"""
Configuration settings for the distinct-degrees toolkit
Loads environment variables and provides run-time defaults
"""

from functools import lru_cache
from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Toolkit settings loaded from environment variables (prefix ``DDT_``)"""

    model_config = SettingsConfigDict(
        env_prefix="DDT_",
        env_file=".env",
        case_sensitive=False,
        extra="ignore",
    )

    # Search guards
    exact_guard_n: int = Field(default=64, ge=0)  # clique / independent set branch-and-bound
    enumeration_guard_n: int = Field(default=24, ge=0)  # f_exact subset enumeration
    pair_guard_n: int = Field(default=4096, ge=0)  # pair sums and distance tables
    bigint_guard: int = Field(default=4096, ge=0)  # s+t limit for exact collision rationals

    # Campaigns
    threads: int = Field(default=1, ge=1)
    default_trials: int = Field(default=100, ge=1)

    # Logging
    log_level: str = "INFO"
    log_format: Literal["console", "json"] = "console"


@lru_cache()
def get_settings() -> Settings:
    """Get cached toolkit settings"""
    return Settings()


# Global settings instance
settings = get_settings()
