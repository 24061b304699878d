"""Error hierarchy shared by every numeric layer."""

from __future__ import annotations

from typing import Any

import mpmath


class QPochError(Exception):
    """Base class for all library errors."""


class DomainError(QPochError, ValueError):
    """Input lies outside the documented domain of an operation."""


class PrecisionError(QPochError):
    """Requested precision is below the minimum or beyond a constant's capacity."""


class ConvergenceError(QPochError):
    """A series or product cannot reach the requested tolerance."""


class ConfigError(QPochError):
    """Environment or command-line configuration is invalid."""


def ensure_finite(value: Any, what: str) -> Any:
    """Raise :class:`ConvergenceError` when ``value`` carries NaN or infinity."""

    if mpmath.isnan(value) or mpmath.isinf(value):
        raise ConvergenceError(f"{what} produced a non-finite value")
    return value
