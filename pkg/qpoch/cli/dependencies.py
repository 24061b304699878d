"""Command dependency wiring helpers."""

from __future__ import annotations

from pathlib import Path
from typing import Optional

from qpoch.config import AppConfig
from qpoch.core.arith import Precision
from qpoch.repositories.results import ResultRepository


class DependencyProvider:
    """Simple container for lazy dependency access."""

    def __init__(self, config: AppConfig) -> None:
        self._config = config

    def config(self) -> AppConfig:
        return self._config

    def precision(self, bits: Optional[int] = None) -> Precision:
        return Precision(self._config.default_prec_bits if bits is None else bits, self._config.guard_bits)

    def repository(self, output_format: Optional[str] = None, out: Optional[Path] = None) -> ResultRepository:
        return ResultRepository(output_format or self._config.output_format, path=out)

    def euler_capacity(self) -> int:
        return self._config.euler_capacity_bits
