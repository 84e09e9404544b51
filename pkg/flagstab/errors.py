"""
Exception types raised across the flagstab package.
"""
from typing import Optional


class FlagStabError(Exception):
    """Base class for all flagstab errors."""


class ValidationError(FlagStabError, ValueError):
    """Raised when an input is malformed or violates a precondition."""

    def __init__(self, message: str, field: Optional[str] = None):
        super().__init__(message)
        self.field = field


class ChamberBoundaryError(ValidationError):
    """Raised when a weight lies on a wall of the Weyl chamber."""

    def __init__(self, wall: int, message: Optional[str] = None):
        super().__init__(
            message or f"weight lies on the wall of simple root alpha_{wall}",
            field="chi",
        )
        self.wall = wall


class ScaleGuardError(FlagStabError, RuntimeError):
    """Raised when a computation would exceed a configured size guard."""


class CertificateError(FlagStabError, RuntimeError):
    """Raised when an exact result fails its own verification."""


class PathConstructionError(FlagStabError, RuntimeError):
    """Raised when the highest-root path does not reach its endpoint."""
