from pathlib import Path
from typing import Optional

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_file=".env", env_file_encoding="utf-8", case_sensitive=False, extra="ignore")

    # Core
    APP_NAME: str = "SternLab"
    ENV: str = "dev"
    LOG_LEVEL: str = "WARNING"

    # Search
    STERN_CAP: int = 2**34
    STERN_WORKERS: int = 1
    SPLIT_DEPTH: int = 8
    CHECKPOINT_EVERY: int = 2**20
    MAX_MODULUS: int = 65535

    # n = 1 satisfies the congruence vacuously; None means calibrate against Pi_{0,2}(2^15) = 97
    COUNT_UNIT_INDEX: Optional[bool] = None

    # Golden data
    FIXTURES_DIR: Path = Path(__file__).resolve().parent.parent / "fixtures"


settings = Settings()
