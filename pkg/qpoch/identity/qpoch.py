"""Reference evaluation of the q-Pochhammer logarithm and plain products."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any

from qpoch.core.arith import BranchContext, Numeric, Precision, reduce_strip
from qpoch.core.errors import ConvergenceError, DomainError, ensure_finite

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QPochEval:
    """Value of ``log (e^-y; e^-beta)_inf`` together with a tail bound."""

    log_value: Any
    tail_bound: Any
    terms_used: int


def region_limit(beta: Any, prec: Precision) -> Any:
    """``Y_max = min(0.9 pi |cot arg beta|, pi sqrt 3)``."""

    ctx = prec.ctx
    theta = abs(ctx.arg(beta))
    cap = ctx.pi * ctx.sqrt(3)
    if theta == 0:
        return cap
    return min(ctx.mpf("0.9") * ctx.pi * abs(ctx.cot(theta)), cap)


def validate_region(y: Numeric, beta: Numeric, prec: Precision) -> tuple[Any, BranchContext]:
    """Reduce ``y`` to the strip and check it lies in the admissible region.

    Raises :class:`DomainError` when ``|arg beta| >= pi/2``, when
    ``Re y <= -Y_max`` after reduction, or when ``y`` sits on the cut
    ``beta * R_{<=0}`` (which contains the zeros ``beta * Z_{<=0}``).
    """

    branch = BranchContext(prec.complex(beta), prec)
    reduced, _ = reduce_strip(y, prec)
    if reduced.real <= -region_limit(branch.beta, prec):
        raise DomainError(f"y = {y} lies outside the region Re y > -Y_max")
    if branch.on_cut(reduced):
        raise DomainError(f"y = {y} lies on the branch cut beta * R<=0")
    return reduced, branch


def _tracked_log1m_exp(w: Any, beta: Any, prec: Precision) -> Any:
    """``log(1 - e^-w)`` continued along ``w + t beta`` from ``Re > 0`` back to ``t = 0``."""

    ctx = prec.ctx
    two_pi = 2 * ctx.pi
    t = (1 - w.real) / beta.real
    point = w + t * beta
    value = ctx.log1p(-ctx.exp(-point))
    abs_beta = abs(beta)
    floor = ctx.ldexp(1, -prec.bits // 2)
    while t > 0:
        gap = abs(ctx.expm1(point))
        if gap < floor:
            raise DomainError("argument is too close to a zero of the product")
        step = min(t, gap / (4 * abs_beta))
        t -= step
        point = w + t * beta
        principal = ctx.log(-ctx.expm1(-point))
        turns = ctx.nint((value.imag - principal.imag) / two_pi)
        value = principal + ctx.mpc(0, two_pi * turns)
    return value


def oracle_log_qpoch(y: Numeric, beta: Numeric, prec: Precision, tol: Numeric | None = None) -> QPochEval:
    """Direct sum ``sum_k log(1 - e^-(y + k beta))`` on the branch continuous from ``y -> +inf``.

    Terms with ``Re(y + k beta) <= 0`` are continued along their ``beta``
    ray so that no ``2 pi i`` jump is introduced.
    """

    ctx = prec.ctx
    reduced, branch = validate_region(y, beta, prec)
    beta_c = branch.beta
    tolerance = prec.eps if tol is None else prec.real(tol)
    if tolerance <= 0:
        raise DomainError("tolerance must be positive")
    re_beta = beta_c.real
    q_abs = ctx.exp(-re_beta)
    one_minus_q = -ctx.expm1(-re_beta)
    # |w_{K+1}| <= tol (1 - |q|) / 2 keeps the tail below tol
    need = ctx.log(2 / (tolerance * one_minus_q)) - reduced.real
    last = max(0, int(ctx.ceil(need / re_beta)) - 1)
    floor = ctx.ldexp(1, -prec.working_bits) * (last + 1)
    if tolerance < floor:
        raise ConvergenceError(f"tolerance {tolerance} is below the rounding floor at {prec.bits} bits")
    total = ctx.mpc(0)
    tracked = 0
    for k in range(last + 1):
        w = reduced + k * beta_c
        if w.real > 0:
            total += ctx.log1p(-ctx.exp(-w))
        else:
            total += _tracked_log1m_exp(w, beta_c, prec)
            tracked += 1
    w_next = abs(ctx.exp(-(reduced + (last + 1) * beta_c)))
    tail = 2 * w_next / (1 - q_abs)
    logger.debug("Oracle summed %d terms (%d continued along beta)", last + 1, tracked)
    return QPochEval(log_value=ensure_finite(total, "oracle_log_qpoch"), tail_bound=tail, terms_used=last + 1)


def _factor_count(z_abs: Any, q_abs: Any, tol: Any, prec: Precision) -> int:
    ctx = prec.ctx
    if z_abs == 0 or q_abs == 0:
        return 1
    needed = ctx.log(4 * z_abs / (tol * (1 - q_abs))) / -ctx.log(q_abs)
    return max(1, int(ctx.ceil(needed)))


def qpoch_product(z: Numeric, q: Numeric, prec: Precision, tol: Numeric | None = None) -> Any:
    """``prod_{j>=0} (1 - z q^j)`` truncated once the relative tail is below ``tol``."""

    ctx = prec.ctx
    zc = prec.complex(z)
    qc = prec.complex(q)
    q_abs = abs(qc)
    if q_abs >= 1:
        raise DomainError("qpoch_product needs |q| < 1")
    tolerance = prec.eps if tol is None else prec.real(tol)
    count = _factor_count(abs(zc), q_abs, tolerance, prec)
    product = ctx.mpc(1)
    power = ctx.mpc(1)
    for _ in range(count):
        product *= 1 - zc * power
        power *= qc
    return product


def log_qpoch_product(z: Numeric, q: Numeric, prec: Precision, tol: Numeric | None = None) -> Any:
    """``sum_j log(1 - z q^j)`` with principal ``log1p``; accurate when the product is close to 1."""

    ctx = prec.ctx
    zc = prec.complex(z)
    qc = prec.complex(q)
    q_abs = abs(qc)
    if q_abs >= 1 or abs(zc) >= 1:
        raise DomainError("log_qpoch_product needs |z| < 1 and |q| < 1")
    tolerance = prec.eps if tol is None else prec.real(tol)
    count = _factor_count(abs(zc), q_abs, tolerance, prec)
    total = ctx.mpc(0)
    power = ctx.mpc(1)
    for _ in range(count):
        total += ctx.log1p(-zc * power)
        power *= qc
    return total

