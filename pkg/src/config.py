from functools import lru_cache
from pathlib import Path

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    APP_TITLE: str = "type-a-mgs"
    APP_DESCRIPTION: str = (
        "Minimal-length maximal green sequences for type A quivers"
    )
    APP_VERSION: str = "0.1.0"

    DEBUG: bool = False

    LOG_DIR: Path = Path("logs")
    LOG_LEVEL: str = "INFO"

    # Resource guards for the exhaustive parts
    SEARCH_MAX_STATES: int = 2_000_000
    ENUMERATION_MAX_POLYGON: int = 16
    CENSUS_WITNESS_MAX_POLYGON: int = 8
    INSCRIBED_POLYGON_MAX_TRIANGLES: int = 12

    CENSUS_DEFAULT_JOBS: int = 1
    RANDOM_SEED: int = 20240601

    REPORT_SCHEMA_VERSION: int = 1

    model_config = SettingsConfigDict(
        env_file=Path(__file__).parents[1] / ".env", extra="ignore"
    )


@lru_cache
def get_settings():
    return Settings()
