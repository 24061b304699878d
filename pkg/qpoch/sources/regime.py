"""Partial sums of the symbolic regime expansions (``c > 0``)."""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Any, Iterator

from qpoch.core.arith import Precision
from qpoch.core.errors import DomainError
from qpoch.expansions.coefficients import regime_coefficients
from qpoch.expansions.evaluate import group_values
from qpoch.expansions.symbolic import regime_for
from qpoch.sources.base import PartialSum, PartialSumSource, scaled_argument

logger = logging.getLogger(__name__)


class SymbolicRegimeSource(PartialSumSource):
    """Groups of ``regime_coefficients(c, .)`` summed in increasing ``beta`` power.

    Orders live on the exponent lattice: ``order = beta_exp * denominator(c)``.
    """

    name = "symbolic"

    def __init__(self, c: Fraction | int | str, x: Any, beta: Any, prec: Precision, euler_capacity: int = 4096) -> None:
        self.c = Fraction(c)
        self.regime = regime_for(self.c)
        if self.c == 0:
            raise DomainError("c = 0 is handled by FixedYSource")
        self.x = x
        self.beta = beta
        self.prec = prec
        self._euler_capacity = euler_capacity

    @property
    def oracle_argument(self) -> Any:
        return scaled_argument(self.x, self.beta, self.c, self.prec)

    def partial_sums(self, max_order: int) -> Iterator[PartialSum]:
        lattice = self.c.denominator
        expansion = regime_coefficients(self.c, Fraction(max_order, lattice))
        groups = group_values(expansion, self.x, self.beta, self.prec, self._euler_capacity)
        logger.debug("Regime %s produced %d groups", self.regime.value, len(groups))
        partial = self.prec.ctx.mpc(0)
        for exponent, value in groups:
            partial = partial + value
            yield PartialSum(order=int(exponent * lattice), beta_exp=exponent, partial=partial)
