"""Exact coefficient generation for the ``y = x beta^c`` regimes."""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from typing import Iterator

from qpoch.core.errors import DomainError
from qpoch.expansions.symbolic import Expansion, Regime, SymbolicTerm, merge_terms, regime_for
from qpoch.special.sequences import bernoulli_number, bernoulli_poly_coefficients
from qpoch.special.zeta import zeta_even_rational

logger = logging.getLogger(__name__)

T = SymbolicTerm.build

FIXED_Y_NOTE = "coefficients are Li_{2-k}(e^-x); evaluated numerically"


def _double_sum(c: Fraction, cutoff: Fraction) -> Iterator[SymbolicTerm]:
    """``-sum_{n>=1} sum_{k<=n+1} B_k B_n x^(n+1-k) / (k! n (n+1-k)!) beta^((1-c)(k-1) + c n)``.

    Enumerated by ``j = n + 1 - k`` so that ``beta``'s exponent is ``k - 1 + c j``.
    """

    j = 0
    while c * j - 1 <= cutoff:
        k = 0
        while k - 1 + c * j <= cutoff:
            n = k + j - 1
            if n >= 1:
                b_k = bernoulli_number(k)
                b_n = bernoulli_number(n)
                if b_k and b_n:
                    coeff = -b_k * b_n / (math.factorial(k) * n * math.factorial(j))
                    yield T(coeff, k - 1 + c * j, j)
            k += 1
        j += 1


def _small_c_terms(c: Fraction, cutoff: Fraction) -> Iterator[SymbolicTerm]:
    d = 1 - c
    yield T(Fraction(-1, 6), -1, pi_power=1)
    yield T(1, c - 1, 1)
    yield T(-1, c - 1, 1, log_x=True)
    yield T(-c, c - 1, 1, log_beta=True)
    yield T(c / 2, 0, log_beta=True)
    yield T(Fraction(1, 2), 0, log_x=True)
    k = 1
    while d * (2 * k - 1) <= cutoff:
        b = bernoulli_number(2 * k)
        yield T(-b / (2 * k * (2 * k - 1)), d * (2 * k - 1), -(2 * k - 1))
        k += 1
    yield from _double_sum(c, cutoff)


def _unit_c_terms(cutoff: Fraction) -> Iterator[SymbolicTerm]:
    yield T(Fraction(-1, 6), -1, pi_power=1)
    yield T(Fraction(1, 2), 0, log_beta=True)
    yield T(-1, 0, 1, log_beta=True)
    yield T(-1, 0, log_gamma_x=True)
    yield T(Fraction(1, 2), 0, log_2pi=True)
    n = 1
    while n <= cutoff:
        b_n = bernoulli_number(n)
        if b_n:
            scale = -b_n / (n * math.factorial(n + 1))
            for power, coeff in enumerate(bernoulli_poly_coefficients(n + 1)):
                if coeff:
                    yield T(scale * coeff, n, power)
        n += 1


def _large_c_terms(c: Fraction, cutoff: Fraction) -> Iterator[SymbolicTerm]:
    e = c - 1
    yield T(Fraction(-1, 6), -1, pi_power=1)
    yield T(c - Fraction(1, 2), 0, log_beta=True)
    yield T(1, 0, log_x=True)
    yield T(Fraction(1, 2), 0, log_2pi=True)
    yield T(1, e, 1, euler_gamma=True)
    yield T(-1, e, 1, log_beta=True)
    k = 2
    while e * k <= cutoff:
        sign = Fraction(-(-1) ** k, k)
        if k % 2 == 0:
            ratio, j = zeta_even_rational(k)
            yield T(sign * ratio, e * k, k, pi_power=j)
        else:
            yield T(sign, e * k, k, zeta=k)
        k += 1
    yield from _double_sum(c, cutoff)


def raw_terms(c: Fraction | int, cutoff: Fraction | int) -> Iterator[SymbolicTerm]:
    """Unmerged terms of the ``c > 0`` expansion up to ``beta^cutoff``."""

    c = Fraction(c)
    cutoff = Fraction(cutoff)
    regime = regime_for(c)
    if regime is Regime.C0:
        raise DomainError("c = 0 has no symbolic terms")
    if regime is Regime.C_SMALL:
        raw = _small_c_terms(c, cutoff)
    elif regime is Regime.C1:
        raw = _unit_c_terms(cutoff)
    else:
        raw = _large_c_terms(c, cutoff)
    return (term for term in raw if term.beta_exp <= cutoff)


def regime_coefficients(c: Fraction | int | str, cutoff_exp: Fraction | int | str) -> Expansion:
    """Exact expansion of ``log (e^-x beta^c; e^-beta)_inf`` through ``beta^cutoff_exp``.

    ``c = 0`` yields an expansion without symbolic terms: its coefficients
    are polylogarithms of ``e^-x`` and are evaluated numerically.
    """

    c = Fraction(c)
    cutoff = Fraction(cutoff_exp)
    if cutoff < -1:
        raise DomainError(f"cutoff exponent must be >= -1, got {cutoff}")
    regime = regime_for(c)
    if regime is Regime.C0:
        return Expansion(regime=regime, c=c, cutoff_exp=cutoff, terms=(), note=FIXED_Y_NOTE)
    terms = merge_terms(raw_terms(c, cutoff))
    logger.debug("Generated %d terms for c=%s up to beta^%s", len(terms), c, cutoff)
    return Expansion(regime=regime, c=c, cutoff_exp=cutoff, terms=terms)
