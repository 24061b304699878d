"""Sweep pipeline: oracle value, partial sums, errors, persistence."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional, Sequence

from qpoch.core.arith import ExactComplex, Precision
from qpoch.core.errors import DomainError
from qpoch.estimates import TruncEstimate, estimate_optimal
from qpoch.expansions.symbolic import Regime, regime_for
from qpoch.identity.qpoch import oracle_log_qpoch
from qpoch.models import SweepMeta, SweepRowRecord
from qpoch.repositories.results import ResultRepository
from qpoch.sources.base import PartialSumSource
from qpoch.sources.fixed_y import FixedYSource
from qpoch.sources.regime import SymbolicRegimeSource
from qpoch.sources.uniform import UniformSource

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SweepRow:
    order: int
    beta_exp: Fraction
    partial: Any
    abs_error: Any

    def to_record(self, prec: Precision) -> SweepRowRecord:
        return SweepRowRecord(
            order=self.order,
            beta_exp=str(self.beta_exp),
            partial_re=prec.format(self.partial.real),
            partial_im=prec.format(self.partial.imag),
            abs_error=prec.format(self.abs_error),
        )


def value_text(value: Any, prec: Precision) -> str:
    """Exact inputs keep their rational form; everything else is printed at ``prec``."""

    if isinstance(value, (int, Fraction, ExactComplex, str)):
        return str(value)
    return prec.format(value)


def required_bits(r_star: Any) -> int:
    """Precision policy ``1.2 * (-log2 R*) + 64`` for resolving errors of size ``R*``."""

    magnitude = -float(r_star.context.log(r_star, 2)) if r_star > 0 else 0.0
    return int(math.ceil(1.2 * max(magnitude, 0.0))) + 64


class SweepOrchestrator:
    """High-level workflow: oracle → partial sums → rows → persist."""

    def __init__(self, source: PartialSumSource, repository: Optional[ResultRepository] = None) -> None:
        self._source = source
        self._repository = repository

    @property
    def source(self) -> PartialSumSource:
        return self._source

    def meta(self, max_order: int) -> SweepMeta:
        source = self._source
        return SweepMeta(
            regime=source.regime.value,
            c=str(source.c),
            x=value_text(source.x, source.prec),
            beta=value_text(source.beta, source.prec),
            prec_bits=source.prec.bits,
            max_order=max_order,
        )

    def run(self, max_order: int) -> list[SweepRow]:
        source = self._source
        logger.info("Starting %s sweep up to order %d at %d bits", source.name, max_order, source.prec.bits)
        reference = oracle_log_qpoch(source.oracle_argument, source.beta, source.prec)
        logger.info("Oracle computed with %d factors", reference.terms_used)

        rows = []
        for item in source.partial_sums(max_order):
            error = abs(item.partial - reference.log_value)
            logger.debug("order %d: error %s", item.order, source.prec.ctx.nstr(error, 5))
            rows.append(SweepRow(order=item.order, beta_exp=item.beta_exp, partial=item.partial, abs_error=error))
        rows.sort(key=lambda row: row.order)
        logger.info("Collected %d sweep rows", len(rows))
        if rows:
            best = optimal_row(rows)
            logger.info("Smallest error %s at order %d", source.prec.ctx.nstr(best.abs_error, 5), best.order)

        if self._repository is not None:
            self._repository.save_sweep(self.meta(max_order), [row.to_record(source.prec) for row in rows])
        return rows


def create_source(
    regime: Regime | str,
    x: Any,
    beta: Any,
    prec: Precision,
    c: Fraction | int | str = 0,
    euler_capacity: int = 4096,
) -> PartialSumSource:
    """Pick the partial-sum source for ``regime``; ``c`` must agree with it."""

    regime = Regime(regime)
    c = Fraction(c)
    if regime is Regime.UNIFORM:
        if c < 0:
            raise DomainError(f"scaling exponent must be non-negative, got {c}")
        return UniformSource(x, beta, prec, c)
    if regime is Regime.C1 and c == 0:
        c = Fraction(1)
    if regime_for(c) is not regime:
        raise DomainError(f"c = {c} does not belong to regime {regime.value}")
    if regime is Regime.C0:
        return FixedYSource(x, beta, prec)
    return SymbolicRegimeSource(c, x, beta, prec, euler_capacity)


def _precision_estimate(source: PartialSumSource) -> Optional[TruncEstimate]:
    regime = source.regime
    try:
        return estimate_optimal(regime, source.x, source.beta, source.prec, c=source.c)
    except DomainError:
        return None


def sweep(
    regime: Regime | str,
    x: Any,
    beta: Any,
    max_order: int,
    prec: Precision,
    c: Fraction | int | str = 0,
    repository: Optional[ResultRepository] = None,
    euler_capacity: int = 4096,
) -> list[SweepRow]:
    """Error of every partial sum up to ``max_order`` against the product oracle."""

    if max_order < 0:
        raise DomainError(f"max_order must be non-negative, got {max_order}")
    source = create_source(regime, x, beta, prec, c, euler_capacity)
    estimate = _precision_estimate(source)
    if estimate is not None:
        needed = required_bits(estimate.r_star)
        if prec.bits < needed:
            logger.warning(
                "Precision %d bits is below the %d bits needed to resolve errors near %s",
                prec.bits,
                needed,
                prec.ctx.nstr(estimate.r_star, 3),
            )
    rows = SweepOrchestrator(source, repository).run(max_order)
    if estimate is not None and rows:
        best = optimal_row(rows)
        logger.info(
            "Optimum at beta^%s, estimate N* = %s (%s)",
            best.beta_exp,
            prec.ctx.nstr(estimate.n_star, 5),
            "inside band" if estimate.brackets(best.beta_exp) else "outside band",
        )
    return rows


def optimal_row(rows: Sequence[SweepRow]) -> SweepRow:
    """Row with the smallest error; ties go to the lowest order."""

    if not rows:
        raise DomainError("empty sweep")
    return min(rows, key=lambda row: (row.abs_error, row.order))


def term_magnitudes(rows: Sequence[SweepRow]) -> list[tuple[int, Any]]:
    """Size of each group added between consecutive rows."""

    magnitudes = []
    previous = None
    for row in rows:
        step = row.partial if previous is None else row.partial - previous
        magnitudes.append((row.order, abs(step)))
        previous = row.partial
    return magnitudes
