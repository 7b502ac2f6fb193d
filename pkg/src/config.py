"""
Environment-driven settings.

All knobs are read once from the process environment and frozen. Tests
reset the cache with ``get_settings.cache_clear()``.
"""

import functools
import os
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field


class Settings(BaseModel):
    """Runtime settings resolved from ``GROVER_*`` environment variables."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    log_level: Literal["debug", "info", "warning", "error"] = "warning"
    log_format: Literal["json", "console"] = "json"
    default_seed: int = Field(0, ge=0, lt=2**64)
    service_max_qubits: int = Field(16, ge=1, le=30)
    bench_repeats: int = Field(3, ge=1)


@functools.lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Get singleton settings instance."""
    return Settings(
        log_level=os.getenv("GROVER_LOG_LEVEL", "warning").lower(),
        log_format=os.getenv("GROVER_LOG_FORMAT", "json").lower(),
        default_seed=int(os.getenv("GROVER_DEFAULT_SEED", "0")),
        service_max_qubits=int(os.getenv("GROVER_SERVICE_MAX_QUBITS", "16")),
        bench_repeats=int(os.getenv("GROVER_BENCH_REPEATS", "3")),
    )
