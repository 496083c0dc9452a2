"""Configuration management for the key polynomial toolkit."""

import logging
import os
from pathlib import Path

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()


def get_setting(key: str, default: str = "") -> str:
    """Get a setting from the environment (``.env`` files included)."""
    return os.getenv(key, default)


def _flag(value: str) -> bool:
    return value.strip().lower() in {"1", "true", "yes", "on"}


# --- Logging Setup ---
LOG_LEVEL = get_setting("LOG_LEVEL", "INFO").upper()

logging.basicConfig(
    level=getattr(logging, LOG_LEVEL, logging.INFO),
    format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
    datefmt="%Y-%m-%d %H:%M:%S",
)
logger = logging.getLogger("keypieri")

# Base paths
BASE_DIR = Path(__file__).parent.parent
DATA_DIR = BASE_DIR / "data"

# Database (verification run history)
DATABASE_PATH = Path(get_setting("DATABASE_PATH", str(DATA_DIR / "keypieri.db")))

# Verification presets
SUITES_DIR = Path(get_setting("SUITES_DIR", str(DATA_DIR / "suites")))

# Enumeration settings
MAX_DIAGRAMS = int(get_setting("KEYPIERI_MAX_DIAGRAMS", "1000000"))  # cap on |KD(a)| and target spaces
CROSSCHECK = _flag(get_setting("KEYPIERI_CROSSCHECK", "0"))  # re-derive results a second way

# Verification settings
DEFAULT_WORKERS = int(get_setting("KEYPIERI_WORKERS", "1"))
DEFAULT_SEED = int(get_setting("KEYPIERI_SEED", "0"))

# Coefficients are checked 64-bit integers
COEFF_MIN = -(2**63)
COEFF_MAX = 2**63 - 1


class ConfigurationError(Exception):
    """Raised when required configuration is missing or invalid."""
    pass


def validate_config(max_diagrams: int | None = None) -> list[str]:
    """Validate configuration and return list of issues.

    Args:
        max_diagrams: Cap to validate instead of the configured ``MAX_DIAGRAMS``.

    Returns:
        List of warning strings for non-critical issues.

    Raises:
        ConfigurationError: If the enumeration cap is not a positive integer.
    """
    issues = []
    cap = MAX_DIAGRAMS if max_diagrams is None else max_diagrams

    if cap < 1:
        raise ConfigurationError(f"KEYPIERI_MAX_DIAGRAMS must be positive, got {cap}")
    if cap > 50_000_000:
        issues.append(f"Enumeration cap {cap} is very large; runs may exhaust memory")

    if DEFAULT_WORKERS < 1:
        issues.append(f"KEYPIERI_WORKERS={DEFAULT_WORKERS} is not positive; using 1")

    if not SUITES_DIR.exists():
        issues.append(f"Suites folder does not exist: {SUITES_DIR}")

    return issues


def resolve_cap(cap: int | None) -> int:
    """Return ``cap`` or the configured default when it is ``None``."""
    return MAX_DIAGRAMS if cap is None else cap


def get_database_url() -> str:
    """Get the SQLAlchemy database URL."""
    return f"sqlite:///{DATABASE_PATH}"
