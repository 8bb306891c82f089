from functools import lru_cache
import os

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Base settings shared across environments"""
    APP_NAME: str = "djinn"

    # Environment-specific settings
    ENVIRONMENT: str = "development"
    DEBUG: bool = False

    # Logging settings
    LOG_LEVEL: str = "INFO"
    LOG_SERIALIZE: bool = False

    # Run defaults
    OUTPUT_DIR: str = "./runs"
    DEFAULT_SEED: int = 0
    N_JOBS: int = 1
    N_PERMUTATIONS: int = 5
    TEST_FRACTION: float = 0.2

    # Metrics settings
    METRICS_ENABLED: bool = False
    METRICS_FILE: str = "metrics.prom"

    model_config = SettingsConfigDict(
        env_prefix="DJINN_",
        env_file=".env.local",
        env_file_encoding="utf-8",
        extra="ignore",
    )


@lru_cache
def get_settings() -> Settings:
    """Load settings based on environment"""
    env = os.getenv("DJINN_ENVIRONMENT", "development")
    settings = Settings()

    # Override settings based on environment
    if env.lower() == "development" and settings.DEBUG:
        settings.LOG_LEVEL = "DEBUG"
    return settings
