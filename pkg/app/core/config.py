from pydantic_settings import BaseSettings
from pydantic import Field, field_validator
from typing import Optional


class Settings(BaseSettings):
    # Logging
    LOG_LEVEL: str = Field(default="INFO")
    LOG_FORMAT: str = Field(default="%(asctime)s %(levelname)s %(name)s: %(message)s")

    # Output
    OUTPUT_FORMAT: str = Field(default="json")  # json|text
    JSON_INDENT: Optional[int] = Field(default=2)

    # Workers (genus 리포트 / enumerator)
    DEFAULT_JOBS: int = Field(default=1)
    GENUS_PARALLEL_MIN_VERTICES: int = Field(default=5000)

    # Enumerator
    ENUM_DEFAULT_DIM: int = Field(default=4)
    ENUM_MAX_RESULTS: Optional[int] = Field(default=None)

    # Catalog
    CATALOG_MANIFEST: str = Field(default="./data/catalog.json")

    # Random graph generation
    RANDOM_MAX_RESAMPLE: int = Field(default=1000)

    # --- Validators ---
    @field_validator("ENUM_MAX_RESULTS", "JSON_INDENT", mode="before")
    @classmethod
    def _empty_to_none(cls, v):
        if v is None:
            return None
        if isinstance(v, str) and v.strip().lower() in ("", "none", "null"):
            return None
        return v

    @field_validator("OUTPUT_FORMAT", mode="before")
    @classmethod
    def _normalize_format(cls, v):
        if isinstance(v, str):
            v = v.strip().lower()
            if v not in ("json", "text"):
                raise ValueError(f"OUTPUT_FORMAT must be json|text, got {v!r}")
        return v

    class Config:
        env_file = ".env"
        env_file_encoding = "utf-8"


global_settings = Settings()
