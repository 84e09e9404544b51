"""
Runtime settings read from the environment (and an optional .env file).
"""
import logging
import os
from dataclasses import dataclass, replace
from typing import Optional

from dotenv import load_dotenv

logger = logging.getLogger(__name__)

DEFAULT_WEYL_CAP = 2_000_000
MAX_CONE_DIMENSION = 8
DEFAULT_RANK_GUARD = 4
SATURATED_RANK_GUARD = 6


@dataclass(frozen=True)
class Settings:
    threads: int = 1
    weyl_cap: int = DEFAULT_WEYL_CAP
    log_level: str = "INFO"
    allow_large: bool = False

    def with_overrides(self, threads: Optional[int] = None,
                       allow_large: Optional[bool] = None) -> "Settings":
        """Return a copy with command-line overrides applied."""
        changes = {}
        if threads is not None:
            changes['threads'] = max(1, threads)
        if allow_large is not None:
            changes['allow_large'] = allow_large
        return replace(self, **changes)


def _int_from_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"Ignoring non-integer {name}={raw!r}, using {default}")
        return default


def load_settings() -> Settings:
    """
    Load settings from FLAGSTAB_* environment variables.

    Returns:
        Settings with threads, Weyl enumeration cap and log level
    """
    load_dotenv()
    return Settings(
        threads=max(1, _int_from_env('FLAGSTAB_THREADS', 1)),
        weyl_cap=_int_from_env('FLAGSTAB_WEYL_CAP', DEFAULT_WEYL_CAP),
        log_level=os.getenv('FLAGSTAB_LOG_LEVEL', 'INFO').upper(),
    )
