"""Partial sums of the expansion uniform in ``y``."""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Any, Iterator

from qpoch.core.arith import Precision
from qpoch.expansions.symbolic import Regime
from qpoch.expansions.uniform import uniform_head, uniform_terms
from qpoch.sources.base import PartialSum, PartialSumSource, scaled_argument

logger = logging.getLogger(__name__)


class UniformSource(PartialSumSource):
    """Head at order 0, then one row per odd power ``beta^(2k-1)``."""

    name = "uniform"
    regime = Regime.UNIFORM

    def __init__(self, x: Any, beta: Any, prec: Precision, c: Fraction | int = 0) -> None:
        self.x = x
        self.beta = beta
        self.c = Fraction(c)
        self.prec = prec
        self._y = scaled_argument(x, beta, self.c, prec)

    @property
    def oracle_argument(self) -> Any:
        return self._y

    def partial_sums(self, max_order: int) -> Iterator[PartialSum]:
        if max_order < 0:
            return
        partial = uniform_head(self._y, self.beta, self.prec)
        yield PartialSum(order=0, beta_exp=Fraction(0), partial=partial)
        count = (max_order + 1) // 2
        terms = uniform_terms(self._y, self.beta, count, self.prec)
        logger.debug("Computed %d uniform terms", len(terms))
        for k, term in enumerate(terms, start=1):
            partial = partial - term
            yield PartialSum(order=2 * k - 1, beta_exp=Fraction(2 * k - 1), partial=partial)
