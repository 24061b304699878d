"""Polylogarithms of integer order near the exponential singularity."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Any, Literal

from qpoch.core.arith import (
    BranchContext,
    Numeric,
    Precision,
    branched_log,
    const_pi,
    reduce_strip,
)
from qpoch.core.errors import ConvergenceError, DomainError, ensure_finite
from qpoch.special.sequences import bernoulli_number, eulerian

logger = logging.getLogger(__name__)

# |y| below which the Bernoulli expansion beats the power series in e^-y
SERIES_RADIUS = 4
# largest partial-fraction window accepted for the regular part
PARFRAC_MAX_TERMS = 4096


@dataclass(frozen=True)
class PolylogValue:
    value: Any
    branch: Literal["principal", "beta"]
    order: int


def _rational(ctx: Any, q: Any) -> Any:
    return ctx.mpf(q.numerator) / q.denominator


def series_terms(x_abs: Any, prec: Precision) -> int:
    """Terms needed by a Bernoulli series with ratio ``|x|/(2 pi)``."""

    ratio = float(x_abs) / (2 * math.pi)
    if ratio >= 1:
        raise ConvergenceError("Bernoulli series needs |x| < 2*pi")
    if ratio == 0:
        return 2
    return int(math.ceil((prec.working_bits + 10) * math.log(2) / -math.log(ratio))) + 4


def _eulerian_numerator(m: int, z: Any, ctx: Any) -> Any:
    acc = ctx.mpf(0)
    for k in range(m):
        acc = acc * z + eulerian(m, k)
    return acc * z


def li_nonpos(n: int, z: Numeric, prec: Precision) -> Any:
    """``Li_n(z)`` for ``n <= 0``: ``sum_k <m,k> z^(m-k) / (1-z)^(m+1)`` with ``m = -n``."""

    if n > 0:
        raise DomainError(f"li_nonpos needs n <= 0, got {n}")
    ctx = prec.ctx
    zc = prec.complex(z)
    if abs(1 - zc) <= prec.tolerance:
        raise DomainError("Li_n(z) with n <= 0 has a pole at z = 1")
    m = -n
    if m == 0:
        return zc / (1 - zc)
    return _eulerian_numerator(m, zc, ctx) / (1 - zc) ** (m + 1)


def li_nonpos_exp(n: int, x: Numeric, prec: Precision) -> Any:
    """``Li_n(e^-x)`` for ``n <= 0``, computing ``1 - e^-x`` without cancellation."""

    if n > 0:
        raise DomainError(f"li_nonpos_exp needs n <= 0, got {n}")
    ctx = prec.ctx
    xc = prec.complex(x)
    one_minus = -ctx.expm1(-xc)
    if abs(one_minus) <= prec.tolerance:
        raise DomainError("Li_n(e^-x) with n <= 0 has a pole at x in 2*pi*i*Z")
    z = ctx.exp(-xc)
    m = -n
    if m == 0:
        return z / one_minus
    return _eulerian_numerator(m, z, ctx) / one_minus ** (m + 1)


def li_series_exp(k: int, x: Numeric, branch: BranchContext, terms: int, prec: Precision) -> Any:
    """Bernoulli expansion of ``Li_{2-k}(e^-x)`` around ``x = 0``, truncated after ``terms``.

    Singular part: ``pi^2/6 + x log x - x`` for ``k = 0``, ``-log x`` for ``k = 1``
    and ``(k-2)! x^(1-k)`` for ``k >= 2``; logs follow ``branch``.
    """

    if k < 0:
        raise DomainError(f"order index must be non-negative, got {k}")
    ctx = prec.ctx
    xc = prec.complex(x)
    if abs(xc) >= 2 * ctx.pi:
        raise ConvergenceError("Bernoulli expansion of Li needs |x| < 2*pi")
    if k == 0:
        singular = const_pi(prec) ** 2 / 6 + xc * branched_log(xc, branch) - xc
    elif k == 1:
        singular = -branched_log(xc, branch)
    else:
        if xc == 0:
            raise DomainError("Li_{2-k}(e^-x) is singular at x = 0")
        singular = math.factorial(k - 2) * xc ** (1 - k)
    sign = -1 if k % 2 else 1
    total = ctx.mpc(0)
    start = max(1, k - 1)
    power = xc ** (start - k + 1)
    factorial = ctx.mpf(math.factorial(start - k + 1))
    for n in range(start, start + terms):
        b_n = bernoulli_number(n)
        if b_n:
            total += _rational(ctx, b_n) * power / (n * factorial)
        power *= xc
        factorial *= n - k + 2
    return ensure_finite(singular + sign * total, "li_series_exp")


def li12_beta_branch(n: int, y: Numeric, branch: BranchContext, prec: Precision) -> PolylogValue:
    """``Li_1`` or ``Li_2`` of ``e^-y`` on the branch cut along ``-beta``.

    For ``Re y > 0`` this is the principal value; for ``|y| < 2 pi`` the
    expansion around ``y = 0`` is continued with :func:`branched_log`.
    """

    if n not in (1, 2):
        raise DomainError(f"beta-branch polylog is defined for orders 1 and 2, got {n}")
    ctx = prec.ctx
    yc = prec.complex(y)
    if yc.real > 0:
        reduced, _ = reduce_strip(yc, prec)
        if abs(reduced) <= SERIES_RADIUS:
            terms = series_terms(abs(reduced), prec)
            value = li_series_exp(2 - n, reduced, branch, terms, prec)
        else:
            value = _power_series(n, ctx.exp(-reduced), prec)
        return PolylogValue(value=value, branch="principal", order=n)
    if abs(yc) >= 2 * ctx.pi:
        raise DomainError("beta branch needs Re(y) > 0 or |y| < 2*pi")
    if branch.on_cut(yc):
        raise DomainError(f"{y} lies on the branch cut along -beta")
    terms = series_terms(abs(yc), prec)
    value = li_series_exp(2 - n, yc, branch, terms, prec)
    return PolylogValue(value=value, branch="beta", order=n)


def _power_series(n: int, z: Any, prec: Precision) -> Any:
    ctx = prec.ctx
    radius = abs(z)
    if radius >= 1:
        raise ConvergenceError("power series of Li needs |z| < 1")
    total = ctx.mpc(0)
    power = ctx.mpc(1)
    eps = prec.eps * prec.ctx.ldexp(1, -8)
    k = 0
    while True:
        k += 1
        power *= z
        total += power / ctx.mpf(k) ** n
        if abs(power) < eps * (1 - radius):
            return total


def li_regular_part(m: int, x: Numeric, prec: Precision) -> Any:
    """``Li_{-m}(e^-x) - m!/x^(m+1)`` for ``m >= 0``, free of cancellation at small ``x``.

    Picks the partial-fraction sum over the poles ``2 pi i n``, ``n != 0``,
    when it converges quickly, the Bernoulli tail otherwise, and a direct
    subtraction at raised precision when ``|x|`` is large.
    """

    if m < 0:
        raise DomainError(f"regular part needs m >= 0, got {m}")
    ctx = prec.ctx
    xc = prec.complex(x)
    turns = xc.imag / (2 * ctx.pi)
    nearest = ctx.nint(turns)
    if nearest != 0 and abs(xc.real) <= prec.tolerance and abs(turns - nearest) <= prec.tolerance:
        raise DomainError("regular part has a pole at x in 2*pi*i*Z, x != 0")
    in_strip = abs(xc.imag) <= ctx.pi
    if m >= 1 and in_strip:
        window = _parfrac_window(m, xc, prec)
        if window is not None:
            return _parfrac_regular(m, xc, window, prec)
    if abs(xc) <= SERIES_RADIUS:
        return _bernoulli_regular(m, xc, prec)
    return _direct_regular(m, xc, prec)


def _parfrac_window(m: int, xc: Any, prec: Precision) -> int | None:
    two_pi = 2 * math.pi
    growth = max(1.0, (float(abs(xc)) + two_pi) / two_pi)
    target = (prec.working_bits + 10) / (m + 1) + math.log2(growth)
    window = 1
    while window <= PARFRAC_MAX_TERMS:
        needed = target + math.log2(1 + (window + 0.5) / m) / (m + 1)
        if math.log2(window + 0.5) >= needed:
            return window
        window *= 2
    return None


def _parfrac_regular(m: int, xc: Any, window: int, prec: Precision) -> Any:
    work = prec.raised(int(math.log2(2 * window)) + 4)
    ctx = work.ctx
    x = work.complex(xc)
    two_pi_i = ctx.mpc(0, 2 * ctx.pi)
    total = ctx.mpc(0)
    for n in range(window, 0, -1):
        total += (x + n * two_pi_i) ** -(m + 1) + (x - n * two_pi_i) ** -(m + 1)
    return prec.complex(math.factorial(m) * total)


def _bernoulli_regular(m: int, xc: Any, prec: Precision) -> Any:
    ratio = float(abs(xc)) / (2 * math.pi)
    extra = int(math.ceil((m + 1) * -math.log2(1 - ratio))) + 8 if ratio > 0 else 8
    work = prec.raised(extra)
    ctx = work.ctx
    x = work.complex(xc)
    tol = work.eps * math.factorial(m) * (2 * ctx.pi + abs(x)) ** -(m + 1)
    min_terms = int((m + 1) * ratio / max(1e-12, 1 - ratio)) + 4
    total = ctx.mpc(0)
    power = ctx.mpc(1)
    factorial = ctx.mpf(1)
    j = 0
    while True:
        b = bernoulli_number(m + j + 1)
        if b:
            term = _rational(ctx, b) * power / ((m + j + 1) * factorial)
            total += term
            if j >= min_terms and abs(term) < tol:
                break
        j += 1
        power *= x
        factorial *= j
        if j > 50 * (prec.working_bits + m):
            raise ConvergenceError("regular part series failed to converge")
    sign = -1 if m % 2 else 1
    return prec.complex(sign * total)


def _direct_regular(m: int, xc: Any, prec: Precision) -> Any:
    growth = (float(abs(xc)) + 2 * math.pi) / float(abs(xc))
    work = prec.raised(int(math.ceil((m + 1) * math.log2(growth))) + 16)
    x = work.complex(xc)
    value = li_nonpos_exp(-m, x, work) - math.factorial(m) / x ** (m + 1)
    return prec.complex(value)


def parfrac_partial(n: int, x: Numeric, window: int, prec: Precision) -> Any:
    """Symmetric partial sum ``sum_{|k|<=M} (x + 2 pi i k)^-(n+1)``.

    For ``n >= 1`` this tends to ``Li_{-n}(e^-x)/n!``; for ``n = 0`` the
    symmetric sum tends to ``coth(x/2)/2``.
    """

    if n < 0:
        raise DomainError(f"order must be non-negative, got {n}")
    if window < 0:
        raise DomainError("window must be non-negative")
    ctx = prec.ctx
    xc = prec.complex(x)
    turns = xc.imag / (2 * ctx.pi)
    if abs(xc.real) <= prec.tolerance and abs(turns - ctx.nint(turns)) <= prec.tolerance:
        raise DomainError("partial fractions have a pole at x in 2*pi*i*Z")
    two_pi_i = ctx.mpc(0, 2 * ctx.pi)
    total = ctx.mpc(0)
    for k in range(window, 0, -1):
        total += (xc + k * two_pi_i) ** -(n + 1) + (xc - k * two_pi_i) ** -(n + 1)
    return total + xc ** -(n + 1)
