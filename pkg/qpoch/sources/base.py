"""Abstract base classes for partial-sum sources."""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable

from qpoch.core.arith import Precision
from qpoch.expansions.symbolic import Regime


@dataclass(frozen=True)
class PartialSum:
    """Cumulative sum of an expansion through the group ``beta^beta_exp``."""

    order: int
    beta_exp: Fraction
    partial: Any


class PartialSumSource(ABC):
    """Contract for any expansion that can be truncated order by order."""

    name: str
    regime: Regime
    c: Fraction
    x: Any
    beta: Any
    prec: Precision

    @property
    @abstractmethod
    def oracle_argument(self) -> Any:
        """The ``y`` at which ``log(e^-y; e^-beta)_inf`` is approximated."""

    @abstractmethod
    def partial_sums(self, max_order: int) -> Iterable[PartialSum]:
        """Yield cumulative partial sums with ``order <= max_order``, in increasing order."""


def scaled_argument(x: Any, beta: Any, c: Fraction, prec: Precision) -> Any:
    """``y = x beta^c``, exact when ``x`` and ``beta`` are rational and ``c`` is an integer."""

    if c.denominator == 1 and isinstance(x, (int, Fraction)) and isinstance(beta, (int, Fraction)):
        return Fraction(x) * Fraction(beta) ** c.numerator
    ctx = prec.ctx
    beta_c = prec.complex(beta)
    return prec.complex(x) * ctx.exp(ctx.mpf(c.numerator) / c.denominator * ctx.log(beta_c))
