"""Riemann zeta at integers >= 2."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Any

from qpoch.core.arith import Precision, const_pi
from qpoch.core.errors import DomainError
from qpoch.special.sequences import bernoulli_number

_ACCELERATION_RATE = math.log(3 + math.sqrt(8))


def zeta_even_rational(k: int) -> tuple[Fraction, int]:
    """``zeta(2j) = r * pi^(2j)``; returns ``(r, j)``."""

    if k < 2 or k % 2:
        raise DomainError(f"expected an even integer >= 2, got {k}")
    j = k // 2
    ratio = (-1) ** (j + 1) * bernoulli_number(k) * Fraction(2 ** (k - 1), math.factorial(k))
    return ratio, j


def zeta_int(k: int, prec: Precision) -> Any:
    """``zeta(k)`` for integer ``k >= 2``.

    Even arguments come from Bernoulli numbers; odd ones from the alternating
    eta series accelerated with Chebyshev weights, whose truncation error is
    below ``2^-prec`` by construction.
    """

    if k < 2:
        raise DomainError(f"zeta_int needs k >= 2, got {k}")
    ctx = prec.ctx
    if k % 2 == 0:
        ratio, j = zeta_even_rational(k)
        return ctx.mpf(ratio.numerator) / ratio.denominator * const_pi(prec) ** (2 * j)
    n = int(math.ceil((prec.working_bits + 4) * math.log(2) / _ACCELERATION_RATE)) + 1
    d = (3 + ctx.sqrt(8)) ** n
    d = (d + 1 / d) / 2
    b = ctx.mpf(-1)
    c = -d
    total = ctx.mpf(0)
    for i in range(n):
        c = b - c
        total += c / ctx.mpf(i + 1) ** k
        b = (i + n) * (i - n) * b / ((i + ctx.mpf(1) / 2) * (i + 1))
    eta = total / d
    return eta / (1 - ctx.ldexp(1, 1 - k))
