"""
isoset Configuration Settings
Solver budgets, logging and generator limits
"""

from pathlib import Path
from typing import Optional
from pydantic_settings import BaseSettings

# Base directory
BASE_DIR = Path(__file__).resolve().parent.parent


class Settings(BaseSettings):
    """Application settings with environment variable support"""

    # Application
    APP_NAME: str = "isoset"
    APP_VERSION: str = "0.3.0"
    DEBUG: bool = False

    # Logging Configuration
    LOG_LEVEL: str = "INFO"
    LOG_FILE: Optional[Path] = None

    # Exact search
    EXACT_NODE_BUDGET: int = 100_000_000
    NAIVE_MAX_N: int = 12
    CHROMATIC_NODE_BUDGET: int = 5_000_000

    # Coloring assertions after every rotation-sweep
    CHECKED_MODE: bool = True

    # Random instance generation
    GENERATOR_MAX_RETRIES: int = 1000

    # Batch runs
    BENCH_WORKERS: int = 1
    TRACE_DIR: Path = BASE_DIR / "traces"

    class Config:
        env_file = ".env"
        case_sensitive = True
        extra = "ignore"  # Allow extra fields from .env file


# Create settings instance
settings = Settings()


def ensure_trace_dir() -> Path:
    """Create the stall-trace directory on first use"""
    settings.TRACE_DIR.mkdir(parents=True, exist_ok=True)
    return settings.TRACE_DIR
