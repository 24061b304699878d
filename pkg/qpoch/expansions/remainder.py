"""Exponentially small remainders and the convergent series at integer ``x``."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Any

from qpoch.core.arith import Numeric, Precision, const_pi
from qpoch.core.errors import ConvergenceError, DomainError
from qpoch.identity.checks import IdentityReport
from qpoch.identity.qpoch import log_qpoch_product, oracle_log_qpoch
from qpoch.special.sequences import bernoulli_number, bernoulli_poly_exact


def exact_remainder_c1(x: Fraction | int, beta: Numeric, prec: Precision) -> Any:
    """Difference between ``log(e^-x beta; e^-beta)`` and its full ``c = 1`` series.

    ``log(Q; Q)`` for integer ``x`` and ``log(-Q; Q)`` for half-integer ``x``,
    with ``Q = e^(-4 pi^2 / beta)``.
    """

    x = Fraction(x)
    if x <= 0 or (2 * x).denominator != 1:
        raise DomainError(f"exact remainder needs a positive integer or half-integer x, got {x}")
    ctx = prec.ctx
    beta_c = prec.complex(beta)
    if beta_c.real <= 0:
        raise DomainError("exact remainder needs Re beta > 0")
    modular_q = ctx.exp(-4 * const_pi(prec) ** 2 / beta_c)
    z = modular_q if x.denominator == 1 else -modular_q
    return log_qpoch_product(z, modular_q, prec)


def conv_series_terms(x: int, beta: Numeric, count: int, prec: Precision) -> list[Any]:
    """``B_n B_{n+1}(x) beta^n / (n (n+1)!)`` for ``n = 1..count``, coefficients exact."""

    ctx = prec.ctx
    beta_c = prec.complex(beta)
    power = beta_c
    terms = []
    for n in range(1, count + 1):
        b_n = bernoulli_number(n)
        if b_n:
            coeff = b_n * bernoulli_poly_exact(n + 1, x) / (n * math.factorial(n + 1))
            terms.append(ctx.mpf(coeff.numerator) / coeff.denominator * power)
        power *= beta_c
    return terms


def conv_series_check(x: int, beta: Numeric, prec: Precision, tol: Numeric | None = None) -> IdentityReport:
    """Convergent Bernoulli series against ``-beta/24 - log(beta^(x-1) (x-1)! P_x / P_1)``.

    ``P_x = (e^-x beta; e^-beta)_inf``. The series converges for
    ``x beta < 2 pi``; the tail bound ``4(x-1) r^(K+1) / ((K+1)(1-r))`` with
    ``r = (x-1) beta / (2 pi)`` fixes the number of terms.
    """

    if not isinstance(x, int) or x < 2:
        raise DomainError(f"conv_series_check needs an integer x >= 2, got {x}")
    ctx = prec.ctx
    beta_r = prec.real(beta)
    if beta_r <= 0:
        raise DomainError("conv_series_check needs beta > 0")
    pi = const_pi(prec)
    if x * beta_r >= 2 * pi:
        raise ConvergenceError("conv_series_check needs x * beta < 2 pi")
    tolerance = prec.eps if tol is None else prec.real(tol)
    ratio = (x - 1) * beta_r / (2 * pi)
    count = 1
    while 4 * (x - 1) * ratio ** (count + 1) / ((count + 1) * (1 - ratio)) > tolerance:
        count += 1
    lhs = ctx.mpc(0)
    for term in conv_series_terms(x, beta_r, count, prec):
        lhs += term
    p_x = oracle_log_qpoch(x * beta_r, beta_r, prec)
    p_1 = oracle_log_qpoch(beta_r, beta_r, prec)
    rhs = -beta_r / 24 - (x - 1) * ctx.log(beta_r) - ctx.log(ctx.factorial(x - 1)) - p_x.log_value + p_1.log_value
    tail = 4 * (x - 1) * ratio ** (count + 1) / ((count + 1) * (1 - ratio))
    residual = abs(lhs - rhs)
    return IdentityReport(check="conv-series", lhs=lhs, rhs=rhs, residual=residual, certified_tail=tail)
