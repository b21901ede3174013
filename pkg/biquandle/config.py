from functools import lru_cache
from pathlib import Path
from typing import Optional

from pydantic_settings import BaseSettings, SettingsConfigDict

DATA_PATH = Path(__file__).parent.parent / "data"


class Settings(BaseSettings):
    """Runtime settings, read from BIQUANDLE_* environment variables or a .env file"""

    model_config = SettingsConfigDict(env_prefix="BIQUANDLE_", env_file=".env", extra="ignore")

    log_level: str = "INFO"
    jobs: int = 1
    strict: bool = False
    permissive_signs: bool = False
    data_path: Path = DATA_PATH
    four_crossing_table: Optional[Path] = None

    def tables_path(self) -> Path:
        return self.data_path / "tables"

    def resolve_four_crossing_table(self) -> Optional[Path]:
        candidate = self.four_crossing_table or self.tables_path() / "virtual_4_crossing.tsv"
        return candidate if candidate.exists() else None


@lru_cache
def get_settings() -> Settings:
    return Settings()
