"""Expansion uniform in ``y`` near the origin."""

from __future__ import annotations

import logging
import math
from typing import Any

from qpoch.core.arith import Numeric, Precision, const_pi
from qpoch.core.errors import DomainError, ensure_finite
from qpoch.identity.qpoch import QPochEval, validate_region
from qpoch.special.loggamma import log_gamma
from qpoch.special.polylog import li12_beta_branch, li_regular_part
from qpoch.special.sequences import bernoulli_number

logger = logging.getLogger(__name__)


def uniform_head(y: Numeric, beta: Numeric, prec: Precision) -> Any:
    """``-Li_2/beta + log(1-e^-y)/2 + log(2 pi)/2 - y/beta + (y/beta - 1/2) log(y/beta) - log Gamma(y/beta)``."""

    ctx = prec.ctx
    reduced, branch = validate_region(y, beta, prec)
    beta_c = branch.beta
    li2 = li12_beta_branch(2, reduced, branch, prec).value
    li1 = li12_beta_branch(1, reduced, branch, prec).value
    ratio = reduced / beta_c
    half = ctx.mpf(1) / 2
    return (
        -li2 / beta_c
        - li1 / 2
        + ctx.log(2 * const_pi(prec)) / 2
        - ratio
        + (ratio - half) * ctx.log(ratio)
        - log_gamma(ratio, prec)
    )


def uniform_terms(y: Numeric, beta: Numeric, count: int, prec: Precision) -> list[Any]:
    """``T_k = B_2k beta^(2k-1) / (2k)! * R_{2k-2}(y)`` for ``k = 1..count``.

    ``R_m`` is the regular part of ``Li_{-m}(e^-y)`` at ``y = 0``.
    """

    if count < 0:
        raise DomainError("term count must be non-negative")
    ctx = prec.ctx
    reduced, branch = validate_region(y, beta, prec)
    beta_c = branch.beta
    beta_sq = beta_c * beta_c
    power = beta_c
    terms = []
    for k in range(1, count + 1):
        b = bernoulli_number(2 * k)
        regular = li_regular_part(2 * k - 2, reduced, prec)
        terms.append(ctx.mpf(b.numerator) / (b.denominator * math.factorial(2 * k)) * power * regular)
        power *= beta_sq
    return terms


def uniform_expansion(y: Numeric, beta: Numeric, order: int, prec: Precision) -> QPochEval:
    """``head - sum_{k<=N} T_k``; the tail value is ``|T_{N+1}|``."""

    if order < 0:
        raise DomainError(f"order must be non-negative, got {order}")
    head = uniform_head(y, beta, prec)
    terms = uniform_terms(y, beta, order + 1, prec)
    total = head
    for term in terms[:order]:
        total -= term
    logger.debug("Uniform expansion evaluated through order %d", order)
    return QPochEval(log_value=ensure_finite(total, "uniform_expansion"), tail_bound=abs(terms[-1]), terms_used=order)
