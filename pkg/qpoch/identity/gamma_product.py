"""Gamma-product form of the q-Pochhammer logarithm."""

from __future__ import annotations

import logging
import math
from typing import Any

from qpoch.core.arith import Numeric, Precision, const_pi
from qpoch.core.errors import DomainError, ensure_finite
from qpoch.identity.qpoch import QPochEval, validate_region
from qpoch.special.loggamma import stirling_remainder
from qpoch.special.polylog import li12_beta_branch, li_nonpos_exp
from qpoch.special.sequences import bernoulli_number

logger = logging.getLogger(__name__)


def _shifted_arguments(reduced: Any, beta: Any, window: int, prec: Precision) -> list[Any]:
    ctx = prec.ctx
    two_pi_i = ctx.mpc(0, 2 * ctx.pi)
    return [(reduced + n * two_pi_i) / beta for n in range(-window, window + 1)]


def identity_head(reduced: Any, beta: Any, order: int, branch: Any, prec: Precision) -> Any:
    """``sum_{k<=2N} B_k Li_{2-k}(e^-y) (-beta)^(k-1) / k!`` with beta-branch ``Li_1``, ``Li_2``."""

    ctx = prec.ctx
    li2 = li12_beta_branch(2, reduced, branch, prec).value
    li1 = li12_beta_branch(1, reduced, branch, prec).value
    head = -li2 / beta - li1 / 2
    power = beta
    for k in range(2, 2 * order + 1, 2):
        b = bernoulli_number(k)
        head -= ctx.mpf(b.numerator) / (b.denominator * math.factorial(k)) * li_nonpos_exp(2 - k, reduced, prec) * power
        power *= beta * beta
    return head


def identity_tail_bound(reduced: Any, beta: Any, order: int, window: int, prec: Precision) -> Any:
    """Bound on ``sum_{|n|>M} |f_N((y + 2 pi i n)/beta)|``.

    Uses ``|x_n| >= pi (2|n| - 1)/|beta|`` on the strip and the worst sector
    angle among the omitted arguments.
    """

    ctx = prec.ctx
    pi = const_pi(prec)
    arg_beta = ctx.arg(beta)
    candidates = [abs(pi / 2 - arg_beta), abs(-pi / 2 - arg_beta)]
    for n in (window + 1, -(window + 1)):
        candidates.append(abs(ctx.arg((reduced + ctx.mpc(0, 2 * pi * n)) / beta)))
    theta = max(candidates)
    s = 2 * order + 1
    b = bernoulli_number(2 * order + 2)
    constant = abs(ctx.mpf(b.numerator) / b.denominator) / (s * (s + 1) * ctx.cos(theta / 2) ** (s + 1))
    return constant * (abs(beta) / pi) ** s * ctx.mpf(2 * window - 1) ** (1 - s) / (s - 1)


def identity_rhs(y: Numeric, beta: Numeric, order: int, window: int, prec: Precision) -> QPochEval:
    """Right-hand side of the gamma-product identity for ``N >= 1``, ``M >= 1``.

    ``head_N(y) - sum_{|n|<=M} f_N((y + 2 pi i n)/beta)``, returned with a
    certified bound on the omitted ``|n| > M`` terms.
    """

    if order < 1:
        raise DomainError("identity_rhs needs order N >= 1; use identity_rhs_pv for N = 0")
    if window < 1:
        raise DomainError("identity_rhs needs window M >= 1")
    reduced, branch = validate_region(y, beta, prec)
    beta_c = branch.beta
    head = identity_head(reduced, beta_c, order, branch, prec)
    remainders = sum(stirling_remainder(x, order, prec) for x in _shifted_arguments(reduced, beta_c, window, prec))
    logger.debug("Identity head and %d Stirling remainders evaluated", 2 * window + 1)
    return QPochEval(
        log_value=ensure_finite(head - remainders, "identity_rhs"),
        tail_bound=identity_tail_bound(reduced, beta_c, order, window, prec),
        terms_used=2 * window + 1,
    )


def identity_rhs_pv(y: Numeric, beta: Numeric, window: int, prec: Precision) -> QPochEval:
    """Order-zero form with the ``n, -n`` terms paired.

    ``(1/2) log(1 - e^-y) + beta/24 - Li_2(e^-y)/beta - sum_{|n|<=M} f_0(...)``;
    converges like ``1/M``, and the tail value is an estimate of that rate.
    """

    if window < 0:
        raise DomainError("window must be non-negative")
    ctx = prec.ctx
    reduced, branch = validate_region(y, beta, prec)
    beta_c = branch.beta
    li2 = li12_beta_branch(2, reduced, branch, prec).value
    li1 = li12_beta_branch(1, reduced, branch, prec).value
    head = -li1 / 2 + beta_c / 24 - li2 / beta_c
    arguments = _shifted_arguments(reduced, beta_c, window, prec)
    middle = window
    remainders = stirling_remainder(arguments[middle], 0, prec)
    for n in range(1, window + 1):
        remainders += stirling_remainder(arguments[middle + n], 0, prec) + stirling_remainder(arguments[middle - n], 0, prec)
    pi = const_pi(prec)
    estimate = abs(beta_c) * (abs(reduced) + 1) / (24 * pi**2 * max(window, 1))
    return QPochEval(
        log_value=ensure_finite(head - remainders, "identity_rhs_pv"),
        tail_bound=ctx.mpf(estimate),
        terms_used=2 * window + 1,
    )
