"""Principal log-gamma and the Stirling remainder with explicit tail bounds."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Any

from qpoch.core.arith import Numeric, Precision, const_pi
from qpoch.core.errors import ConvergenceError, DomainError, ensure_finite
from qpoch.special.sequences import bernoulli_number

logger = logging.getLogger(__name__)

STIRLING_ORDER_CAP = 64


@dataclass(frozen=True)
class StirlingEval:
    value: Any
    order: int
    tail_bound: Any


def _log2_abs_fraction(q: Any) -> float:
    return math.log2(abs(q.numerator)) - math.log2(q.denominator)


def _log2_bound(abs_x: float, theta: float, order: int) -> float:
    k = 2 * order + 2
    return (
        _log2_abs_fraction(bernoulli_number(k))
        - math.log2((k - 1) * k)
        - (k - 1) * math.log2(abs_x)
        - k * math.log2(math.cos(theta / 2))
    )


def _polar(x: Any, prec: Precision) -> tuple[Any, Any]:
    ctx = prec.ctx
    xc = prec.complex(x)
    if xc == 0:
        raise DomainError("Stirling bound is undefined at x = 0")
    theta = abs(ctx.arg(xc))
    if theta >= ctx.pi - prec.tolerance:
        raise DomainError("Stirling bound needs |arg x| < pi")
    return xc, theta


def bound_fN(x: Numeric, order: int, prec: Precision) -> Any:
    """``|B_{2N+2}| / ((2N+1)(2N+2) |x|^(2N+1) cos^(2N+2)(arg(x)/2))``."""

    if order < 0:
        raise DomainError(f"Stirling order must be non-negative, got {order}")
    ctx = prec.ctx
    xc, theta = _polar(x, prec)
    b = bernoulli_number(2 * order + 2)
    magnitude = abs(ctx.mpf(b.numerator) / b.denominator)
    k = 2 * order + 2
    return magnitude / ((k - 1) * k * abs(xc) ** (k - 1) * ctx.cos(theta / 2) ** k)


def _stirling_head(z: Any, order: int, prec: Precision) -> Any:
    ctx = prec.ctx
    log_z = ctx.log(z)
    value = (z - ctx.mpf(1) / 2) * log_z - z + ctx.log(2 * const_pi(prec)) / 2
    inverse = 1 / z
    inverse_sq = inverse * inverse
    power = inverse
    for k in range(1, order + 1):
        b = bernoulli_number(2 * k)
        value += ctx.mpf(b.numerator) / (b.denominator * 2 * k * (2 * k - 1)) * power
        power *= inverse_sq
    return value


def _on_negative_axis(xc: Any, prec: Precision) -> bool:
    return abs(xc.imag) <= prec.tolerance and xc.real <= prec.tolerance


def log_gamma(x: Numeric, prec: Precision) -> Any:
    """Principal ``log Gamma(x)``: real for ``x > 0``, cut along ``(-inf, 0]``.

    Shifts ``x`` up by ``m`` until the Stirling tail at the automatic order
    ``N = min(64, floor(pi |x+m|))`` drops below ``2^-(prec+8)``.
    """

    ctx = prec.ctx
    xc = prec.complex(x)
    if _on_negative_axis(xc, prec):
        raise DomainError(f"log_gamma is undefined on (-inf, 0], got {x}")
    target = -(prec.working_bits + 8)
    shift = max(0, int(math.ceil(-float(xc.real))))
    while True:
        z = xc + shift
        abs_z = float(abs(z))
        theta = abs(float(ctx.arg(z)))
        order = min(STIRLING_ORDER_CAP, max(1, int(math.pi * abs_z)))
        if theta < math.pi * 0.99 and _log2_bound(abs_z, theta, order) < target:
            break
        shift += 1
    value = _stirling_head(z, order, prec)
    for j in range(shift):
        value -= ctx.log(xc + j)
    return ensure_finite(value, "log_gamma")


def stirling_remainder(x: Numeric, order: int, prec: Precision) -> Any:
    """``f_N(x) = log Gamma(x) - Stirling head of order N`` for ``|arg x| < pi``.

    Summed directly from the Stirling tail when it converges to working
    precision, otherwise taken as the difference at raised precision.
    """

    if order < 0:
        raise DomainError(f"Stirling order must be non-negative, got {order}")
    xc, theta = _polar(x, prec)
    abs_x = float(abs(xc))
    target = -(prec.working_bits + 8)
    cutoff = None
    previous = math.inf
    for k in range(order + 1, order + 1 + 2 * STIRLING_ORDER_CAP):
        log2 = _log2_bound(abs_x, float(theta), k)
        if log2 < target:
            cutoff = k
            break
        if log2 > previous:
            break
        previous = log2
    if cutoff is not None:
        ctx = prec.ctx
        inverse = 1 / xc
        inverse_sq = inverse * inverse
        power = inverse ** (2 * order + 1)
        value = ctx.mpc(0)
        for k in range(order + 1, cutoff + 1):
            b = bernoulli_number(2 * k)
            value += ctx.mpf(b.numerator) / (b.denominator * 2 * k * (2 * k - 1)) * power
            power *= inverse_sq
        return value
    extra = max(0, int(math.log2(abs_x * (abs(math.log(abs_x)) + 1) + 1))) + 16
    work = prec.raised(extra)
    xw = work.complex(xc)
    value = log_gamma(xw, work) - _stirling_head(xw, order, work)
    return prec.complex(value)


def stirling_fN(x: Numeric, order: int, prec: Precision) -> StirlingEval:
    """Stirling remainder on the sector ``|arg x| <= 3 pi/4`` together with its bound."""

    ctx = prec.ctx
    xc = prec.complex(x)
    if xc == 0 or abs(ctx.arg(xc)) > 3 * const_pi(prec) / 4 + prec.tolerance:
        raise DomainError("stirling_fN needs x != 0 and |arg x| <= 3*pi/4")
    value = stirling_remainder(xc, order, prec)
    return StirlingEval(value=value, order=order, tail_bound=bound_fN(xc, order, prec))


def artin_f1(x: Numeric, terms: int, prec: Precision) -> Any:
    """``f_1(x)`` from the convergent telescoped series.

    ``-1/(12x) + 1/(12(x+K)) + sum_{n<K} [(x+n+1/2) log(1 + 1/(x+n)) - 1]``,
    whose summand decays like ``(x+n)^-4``.
    """

    if terms < 1:
        raise ConvergenceError("artin_f1 needs at least one term")
    ctx = prec.ctx
    xc = prec.complex(x)
    if _on_negative_axis(xc, prec):
        raise DomainError(f"artin_f1 is undefined on (-inf, 0], got {x}")
    half = ctx.mpf(1) / 2
    total = -1 / (12 * xc) + 1 / (12 * (xc + terms))
    for n in range(terms):
        shifted = xc + n
        total += (shifted + half) * ctx.log1p(1 / shifted) - 1
    return total
