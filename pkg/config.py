"""Configuration management using Pydantic Settings."""

import os
from functools import lru_cache
from typing import Optional

from pydantic import ConfigDict
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Application settings loaded from WANDERING_LAB_* environment variables."""

    # Application
    log_level: str = "INFO"
    output_dir: str = "."

    # Worker pool (None means one worker per CPU)
    threads: Optional[int] = None

    # Classification budgets
    cauliflower_max_iter: int = 5000
    wandering_max_steps: int = 1000
    component_resolution: int = 1024

    # Parameter-family exploration bound, absolute in local coordinates
    explore_radius: float = 1.0

    model_config = ConfigDict(
        env_prefix="WANDERING_LAB_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    @property
    def worker_count(self) -> int:
        """Number of worker threads for grid classification."""
        if self.threads is not None and self.threads > 0:
            return self.threads
        return os.cpu_count() or 1


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
