"""Numerical cross-checks of the identity and its classical consequences."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any

import mpmath

from qpoch.core.arith import BranchContext, Numeric, Precision, const_pi, is_integer_like
from qpoch.core.errors import DomainError
from qpoch.identity.gamma_product import identity_rhs
from qpoch.identity.qpoch import oracle_log_qpoch, qpoch_product, validate_region
from qpoch.special.loggamma import log_gamma
from qpoch.special.polylog import li12_beta_branch

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IdentityReport:
    """Two sides of a checked identity and the distance between them."""

    check: str
    lhs: Any
    rhs: Any
    residual: Any
    certified_tail: Any


def _report(check: str, lhs: Any, rhs: Any, tail: Any) -> IdentityReport:
    residual = abs(lhs - rhs)
    logger.info("%s check residual %s", check, mpmath.nstr(residual, 5))
    return IdentityReport(check=check, lhs=lhs, rhs=rhs, residual=residual, certified_tail=tail)


def identity_check(y: Numeric, beta: Numeric, order: int, window: int, prec: Precision) -> IdentityReport:
    """Identity right-hand side against the direct oracle sum."""

    rhs = identity_rhs(y, beta, order, window, prec)
    lhs = oracle_log_qpoch(y, beta, prec)
    return _report("identity", lhs.log_value, rhs.log_value, rhs.tail_bound + lhs.tail_bound)


def consequence_check(y: Numeric, beta: Numeric, window: int, prec: Precision) -> IdentityReport:
    """``prod_{|n|<=M} e^-1 (1 + beta/(y + 2 pi i n))^((y + 2 pi i n)/beta + 1/2)``.

    Compared with ``exp((Li_2(e^-y-beta) - Li_2(e^-y))/beta)`` over the
    square roots of ``1 - e^-y`` and ``1 - e^-y-beta``. The tail value is the
    estimate ``|beta|^2 / (24 pi^2 (M - 1/2))`` of the omitted factors.
    """

    if window < 1:
        raise DomainError("consequence_check needs window M >= 1")
    ctx = prec.ctx
    reduced, branch = validate_region(y, beta, prec)
    beta_c = branch.beta
    shifted = reduced + beta_c
    half = ctx.mpf(1) / 2
    two_pi_i = ctx.mpc(0, 2 * ctx.pi)
    log_lhs = ctx.mpc(0)
    for n in range(-window, window + 1):
        point = reduced + n * two_pi_i
        log_lhs += (point / beta_c + half) * ctx.log1p(beta_c / point) - 1
    li2_y = li12_beta_branch(2, reduced, branch, prec).value
    li2_shift = li12_beta_branch(2, shifted, branch, prec).value
    li1_y = li12_beta_branch(1, reduced, branch, prec).value
    li1_shift = li12_beta_branch(1, shifted, branch, prec).value
    # log(1 - e^-y) = -Li_1 on the same branch
    log_rhs = (li2_shift - li2_y) / beta_c + (li1_y + li1_shift) / 2
    pi = const_pi(prec)
    tail = abs(beta_c) ** 2 / (24 * pi**2 * (window - half))
    return _report("consequence", ctx.exp(log_lhs), ctx.exp(log_rhs), tail)


def dedekind_check(beta: Numeric, prec: Precision) -> IdentityReport:
    """``(q; q)`` with ``q = e^-beta`` against ``sqrt(2 pi/beta) e^(beta/24 - pi^2/(6 beta)) (Q; Q)``."""

    ctx = prec.ctx
    beta_c = BranchContext(prec.complex(beta), prec).beta
    oracle = oracle_log_qpoch(beta_c, beta_c, prec)
    pi = const_pi(prec)
    modular_q = ctx.exp(-4 * pi**2 / beta_c)
    rhs = ctx.sqrt(2 * pi / beta_c) * ctx.exp(beta_c / 24 - pi**2 / (6 * beta_c)) * qpoch_product(modular_q, modular_q, prec)
    return _report("dedekind", ctx.exp(oracle.log_value), rhs, oracle.tail_bound)


def theta_modular_check(x: Numeric, beta: Numeric, prec: Precision) -> IdentityReport:
    """Jacobi-theta transformation of ``(e^-(x+1) beta; q)(e^(x beta); q)``.

    The right side is ``exp(-pi^2/(3 beta) - pi i (x + 1/2) + (x^2/2 + x/2 + 1/12) beta)``
    times ``(e^(2 pi i x); Q)(e^(-2 pi i x) Q; Q)`` with ``Q = e^(-4 pi^2/beta)``.
    """

    ctx = prec.ctx
    xc = prec.complex(x)
    if is_integer_like(xc, prec):
        raise DomainError("theta_modular_check has zeros at integer x")
    beta_c = BranchContext(prec.complex(beta), prec).beta
    pi = const_pi(prec)
    q = ctx.exp(-beta_c)
    modular_q = ctx.exp(-4 * pi**2 / beta_c)
    lhs = qpoch_product(ctx.exp(-(xc + 1) * beta_c), q, prec) * qpoch_product(ctx.exp(xc * beta_c), q, prec)
    phase = -pi**2 / (3 * beta_c) - ctx.mpc(0, pi) * (xc + ctx.mpf(1) / 2) + (xc**2 / 2 + xc / 2 + ctx.mpf(1) / 12) * beta_c
    rhs = (
        ctx.exp(phase)
        * qpoch_product(ctx.exp(ctx.mpc(0, 2 * pi) * xc), modular_q, prec)
        * qpoch_product(ctx.exp(ctx.mpc(0, -2 * pi) * xc) * modular_q, modular_q, prec)
    )
    floor = ctx.ldexp(1, -prec.bits // 2)
    if abs(lhs) < floor and abs(rhs) < floor:
        raise DomainError("theta_modular_check evaluated at a zero")
    return _report("theta", lhs, rhs, prec.eps)


def artin_product_check(x: Numeric, window: int, prec: Precision) -> IdentityReport:
    """``prod_{n<=M} e^-1 (1 + 1/(x+n))^(x+n+1/2)`` against ``Gamma(x) e^x x^(1/2-x) / sqrt(2 pi)``.

    The partial product carries the factor ``exp(1/(12(x+M+1)))`` that
    accounts for the leading part of the omitted tail.
    """

    if window < 0:
        raise DomainError("window must be non-negative")
    ctx = prec.ctx
    xc = prec.complex(x)
    if abs(xc.imag) <= prec.tolerance and xc.real <= prec.tolerance:
        raise DomainError("artin_product_check needs x off (-inf, 0]")
    half = ctx.mpf(1) / 2
    log_lhs = 1 / (12 * (xc + window + 1))
    for n in range(window + 1):
        shifted = xc + n
        log_lhs += (shifted + half) * ctx.log1p(1 / shifted) - 1
    pi = const_pi(prec)
    log_rhs = log_gamma(xc, prec) + xc + (half - xc) * ctx.log(xc) - ctx.log(2 * pi) / 2
    rhs = ctx.exp(log_rhs)
    tail = abs(rhs) / (360 * abs(xc + window + 1) ** 3)
    return _report("artin", ctx.exp(log_lhs), rhs, tail)
