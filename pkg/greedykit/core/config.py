"""
Toolkit configuration
Loads settings from environment variables and an optional .env file
"""

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Toolkit settings"""

    model_config = SettingsConfigDict(
        env_prefix="GREEDYKIT_",
        env_file=".env",
        case_sensitive=True,
        extra="ignore",
    )

    # Environment
    ENVIRONMENT: str = "development"
    LOG_LEVEL: str = "WARNING"

    # Oracle: refuse enumerations larger than this many subsets
    ORACLE_CAP: int = 10_000_000

    # Property checkers
    VIOLATION_TOLERANCE: float = 1e-9
    MONOTONE_EXHAUSTIVE_LIMIT: int = 20
    DERIVATIVE_EXHAUSTIVE_LIMIT: int = 14
    INTERSECTION_EXHAUSTIVE_LIMIT: int = 12
    CHECK_BUDGET: int = 100_000

    # Benchmarks
    BENCH_TRIALS: int = 100
    BENCH_WORKERS: int = 1
    DEFAULT_SEED: int = 0


settings = Settings()
