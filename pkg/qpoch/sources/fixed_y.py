"""Partial sums of the fixed-``y`` expansion (``c = 0``)."""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Iterator

from qpoch.core.arith import Precision
from qpoch.expansions.evaluate import fixed_y_terms
from qpoch.expansions.symbolic import Regime
from qpoch.sources.base import PartialSum, PartialSumSource


class FixedYSource(PartialSumSource):
    name = "fixed_y"
    regime = Regime.C0

    def __init__(self, x: Any, beta: Any, prec: Precision) -> None:
        self.x = x
        self.beta = beta
        self.c = Fraction(0)
        self.prec = prec

    @property
    def oracle_argument(self) -> Any:
        return self.x

    def partial_sums(self, max_order: int) -> Iterator[PartialSum]:
        partial = self.prec.ctx.mpc(0)
        for exponent, value in fixed_y_terms(self.x, self.beta, max_order, self.prec):
            partial = partial + value
            yield PartialSum(order=int(exponent), beta_exp=exponent, partial=partial)
