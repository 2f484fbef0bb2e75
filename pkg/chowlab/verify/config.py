"""
Configuration for enumeration budgets, resource guards and workers, loaded
with Pydantic's settings management from ``CHOWLAB_*`` environment
variables or a ``.env`` file.
"""
from functools import lru_cache
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class ChowlabSettings(BaseSettings):
    """
    Central, type-safe settings. Command-line flags override these values
    for a single invocation.
    """
    max_n: Optional[int] = Field(None, validation_alias="CHOWLAB_MAX_N", description="Overrides the default enumeration budget of every suite when --max-n is not given.")
    hard_max_n: int = Field(10, validation_alias="CHOWLAB_HARD_MAX_N", description="Enumerations beyond this size need --allow-big.")

    # --- Oracle guards ---
    oracle_hard_max_n: int = Field(6, validation_alias="CHOWLAB_ORACLE_HARD_MAX_N", description="Largest ground set the linear-algebra oracle accepts.")
    oracle_max_columns: int = Field(200_000, validation_alias="CHOWLAB_ORACLE_MAX_COLUMNS", description="Largest number of monomials in one graded slice.")

    # --- Workers and logging ---
    threads: int = Field(1, validation_alias="CHOWLAB_THREADS", description="Worker processes for enumeration suites; 1 runs in process.")
    log_ring_size: int = Field(200, validation_alias="CHOWLAB_LOG_RING_SIZE", description="Number of recent log events kept in memory.")

    # --- Per-suite default budgets ---
    bijection_max_n: int = Field(9, validation_alias="CHOWLAB_BIJECTION_MAX_N")
    rewriting_max_n: int = Field(9, validation_alias="CHOWLAB_REWRITING_MAX_N")
    oracle_boolean_max_n: int = Field(4, validation_alias="CHOWLAB_ORACLE_BOOLEAN_MAX_N", description="Three-way Hilbert series agreement on B_n.")
    oracle_identity_max_n: int = Field(5, validation_alias="CHOWLAB_ORACLE_IDENTITY_MAX_N", description="Ring identity and principal ideals of B_n.")
    oracle_soundness_max_n: int = Field(6, validation_alias="CHOWLAB_ORACLE_SOUNDNESS_MAX_N", description="g_map against the ring of B_n, by nested-set rewriting above the identity range.")
    oracle_uniform_max_n: int = Field(6, validation_alias="CHOWLAB_ORACLE_UNIFORM_MAX_N")
    corollary_max_n: int = Field(8, validation_alias="CHOWLAB_COROLLARY_MAX_N")
    interlacing_max_n: int = Field(10, validation_alias="CHOWLAB_INTERLACING_MAX_N")

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        populate_by_name=True,
        extra="ignore",
    )

    def suite_budget(self, suite: str) -> int:
        """Default ``max_n`` of a suite, honouring ``CHOWLAB_MAX_N``."""
        if self.max_n is not None:
            return self.max_n
        return {
            "bijection": self.bijection_max_n,
            "rewriting": self.rewriting_max_n,
            "oracle": self.oracle_uniform_max_n,
            "corollary": self.corollary_max_n,
            "interlacing": self.interlacing_max_n,
        }[suite]


@lru_cache
def get_settings() -> ChowlabSettings:
    """Cached settings instance; the environment is read once per process."""
    return ChowlabSettings()
