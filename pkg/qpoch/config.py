"""Configuration models and loader utilities."""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass

from qpoch.core.arith import DEFAULT_GUARD_BITS, EULER_CAPACITY_BITS, MIN_BITS
from qpoch.core.errors import ConfigError

_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
_OUTPUT_FORMATS = ("csv", "json")


@dataclass(frozen=True)
class AppConfig:
    """Centralised application configuration."""

    default_prec_bits: int = 256
    guard_bits: int = DEFAULT_GUARD_BITS
    output_format: str = "csv"
    euler_capacity_bits: int = EULER_CAPACITY_BITS
    log_level: str = "INFO"

    def __post_init__(self) -> None:
        if self.default_prec_bits < MIN_BITS:
            raise ConfigError(f"default precision must be at least {MIN_BITS} bits, got {self.default_prec_bits}")
        if self.guard_bits < 0:
            raise ConfigError(f"guard bits must be non-negative, got {self.guard_bits}")
        if self.euler_capacity_bits < MIN_BITS:
            raise ConfigError(f"Euler constant capacity must be at least {MIN_BITS} bits, got {self.euler_capacity_bits}")
        if self.output_format not in _OUTPUT_FORMATS:
            raise ConfigError(f"output format must be one of {_OUTPUT_FORMATS}, got {self.output_format!r}")
        if self.log_level not in _LOG_LEVELS:
            raise ConfigError(f"log level must be one of {_LOG_LEVELS}, got {self.log_level!r}")

    @property
    def logging_level(self) -> int:
        return getattr(logging, self.log_level)


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw.strip())
    except ValueError as exc:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from exc


def load_config() -> AppConfig:
    """Build the application configuration from environment variables."""

    return AppConfig(
        default_prec_bits=_int_env("QPOCH_DEFAULT_PREC", 256),
        guard_bits=_int_env("QPOCH_GUARD_BITS", DEFAULT_GUARD_BITS),
        output_format=os.getenv("QPOCH_OUTPUT_FORMAT", "csv").strip().lower(),
        euler_capacity_bits=_int_env("QPOCH_EULER_CAPACITY", EULER_CAPACITY_BITS),
        log_level=os.getenv("QPOCH_LOG_LEVEL", "INFO").strip().upper(),
    )
