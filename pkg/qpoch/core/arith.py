"""Precision-scoped extended arithmetic on isolated mpmath contexts."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Union

from mpmath.ctx_mp import MPContext

from qpoch.core.errors import DomainError, PrecisionError, ensure_finite

logger = logging.getLogger(__name__)

MIN_BITS = 64
DEFAULT_GUARD_BITS = 32
EULER_CAPACITY_BITS = 4096


@dataclass(frozen=True)
class ExactComplex:
    """Complex number with exact rational parts, as parsed from decimal input."""

    re: Fraction
    im: Fraction = Fraction(0)

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        sign = "+" if self.im >= 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


Numeric = Union[int, float, complex, str, Fraction, ExactComplex, Any]


@lru_cache(maxsize=None)
def _context(working_bits: int) -> MPContext:
    ctx = MPContext()
    ctx.prec = working_bits
    return ctx


def _convert(ctx: MPContext, value: Numeric) -> Any:
    if isinstance(value, ExactComplex):
        return ctx.mpc(_convert(ctx, value.re), _convert(ctx, value.im))
    if isinstance(value, Fraction):
        return ctx.mpf(value.numerator) / value.denominator
    return +ctx.convert(value)


@dataclass(frozen=True)
class Precision:
    """Target precision in bits; every computation runs ``guard`` bits higher.

    Each distinct working precision owns its own ``MPContext`` so that
    concurrent evaluations at different precisions never share global state.
    """

    bits: int
    guard: int = DEFAULT_GUARD_BITS

    def __post_init__(self) -> None:
        if not isinstance(self.bits, int) or self.bits < MIN_BITS:
            raise PrecisionError(f"precision must be at least {MIN_BITS} bits, got {self.bits!r}")
        if self.guard < 0:
            raise PrecisionError(f"guard bits must be non-negative, got {self.guard}")

    @property
    def working_bits(self) -> int:
        return self.bits + self.guard

    @property
    def ctx(self) -> MPContext:
        return _context(self.working_bits)

    @property
    def eps(self) -> Any:
        """Target accuracy ``2^-bits``."""

        return self.ctx.ldexp(1, -self.bits)

    @property
    def tolerance(self) -> Any:
        """Slack used when deciding whether a value sits on a cut or a pole."""

        return self.ctx.ldexp(1, -self.bits + 8)

    @property
    def digits(self) -> int:
        return int(math.ceil(self.bits * math.log10(2))) + 1

    def raised(self, extra: int) -> "Precision":
        return Precision(self.bits + max(0, int(extra)), self.guard)

    def real(self, value: Numeric) -> Any:
        converted = _convert(self.ctx, value)
        if hasattr(converted, "imag") and type(converted) is self.ctx.mpc:
            if converted.imag != 0:
                raise DomainError(f"expected a real value, got {value}")
            return converted.real
        return converted

    def complex(self, value: Numeric) -> Any:
        return self.ctx.mpc(_convert(self.ctx, value))

    def format(self, value: Any) -> str:
        return self.ctx.nstr(value, self.digits)


def const_pi(prec: Precision) -> Any:
    return +prec.ctx.pi


def const_euler_gamma(prec: Precision, capacity_bits: int = EULER_CAPACITY_BITS) -> Any:
    """Euler's constant, refusing precisions beyond the configured capacity."""

    if prec.bits > capacity_bits:
        raise PrecisionError(
            f"Euler's constant is available up to {capacity_bits} bits, requested {prec.bits}"
        )
    return +prec.ctx.euler


def exp(z: Numeric, prec: Precision) -> Any:
    ctx = prec.ctx
    return ensure_finite(ctx.exp(_convert(ctx, z)), "exp")


def principal_log(z: Numeric, prec: Precision) -> Any:
    """Logarithm with the cut on the negative real axis, ``Im`` in ``(-pi, pi]``."""

    ctx = prec.ctx
    value = _convert(ctx, z)
    if value == 0:
        raise DomainError("logarithm of zero")
    return ctx.log(value)


def pow(base: Numeric, exponent: Numeric, prec: Precision) -> Any:
    """Principal power ``exp(w log z)``; ``0^w`` is defined only for ``Re w > 0``."""

    ctx = prec.ctx
    z = _convert(ctx, base)
    w = _convert(ctx, exponent)
    if z == 0:
        if ctx.re(w) > 0:
            return ctx.mpf(0)
        raise DomainError("zero raised to a non-positive power")
    return ctx.exp(w * ctx.log(z))


def sin(z: Numeric, prec: Precision) -> Any:
    ctx = prec.ctx
    return ctx.sin(_convert(ctx, z))


def cos(z: Numeric, prec: Precision) -> Any:
    ctx = prec.ctx
    return ctx.cos(_convert(ctx, z))


def coth(z: Numeric, prec: Precision) -> Any:
    ctx = prec.ctx
    value = _convert(ctx, z)
    # poles at 2*pi*i*Z/2 = pi*i*Z
    turns = ctx.im(value) / ctx.pi
    if abs(ctx.re(value)) <= prec.tolerance and abs(turns - ctx.nint(turns)) <= prec.tolerance:
        raise DomainError("coth evaluated at a pole")
    return ctx.coth(value)


def reduce_strip(y: Numeric, prec: Precision) -> tuple[Any, int]:
    """Shift ``y`` by ``2 pi i * winding`` so that ``Im`` lands in ``(-pi, pi]``."""

    ctx = prec.ctx
    z = prec.complex(y)
    two_pi = 2 * ctx.pi
    winding = int(ctx.ceil((z.imag - ctx.pi) / two_pi))
    return z - ctx.mpc(0, two_pi * winding), winding


def is_integer_like(z: Numeric, prec: Precision) -> bool:
    ctx = prec.ctx
    value = ctx.mpc(_convert(ctx, z))
    return abs(value.imag) <= prec.tolerance and abs(value.real - ctx.nint(value.real)) <= prec.tolerance


@dataclass(frozen=True)
class BranchContext:
    """Direction ``beta`` whose negative ray ``beta * R_{<=0}`` carries the log cut.

    ``strict`` contexts also require ``|arg beta| < pi/2``, the half-plane in
    which the q-Pochhammer symbol converges.
    """

    beta: Any
    prec: Precision = field(compare=False)
    strict: bool = True
    _log_beta: Any = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        ctx = self.prec.ctx
        beta = ctx.mpc(_convert(ctx, self.beta))
        if beta == 0:
            raise DomainError("branch direction must be non-zero")
        if self.strict and not abs(ctx.arg(beta)) < ctx.pi / 2:
            raise DomainError("beta must satisfy |arg(beta)| < pi/2")
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "_log_beta", ctx.log(beta))

    @classmethod
    def rotated(cls, direction: Numeric, prec: Precision) -> "BranchContext":
        """Cut along an arbitrary non-zero direction, without the half-plane check."""

        return cls(direction, prec, strict=False)

    @property
    def log_beta(self) -> Any:
        return self._log_beta

    def on_cut(self, y: Numeric) -> bool:
        ctx = self.prec.ctx
        ratio = ctx.mpc(_convert(ctx, y)) / self.beta
        tol = self.prec.tolerance
        return ratio.real <= tol and abs(ratio.imag) <= tol * max(1, abs(ratio))


def branched_log(y: Numeric, branch: BranchContext) -> Any:
    """``log(y/beta) + log(beta)``: analytic off the ray ``beta * R_{<=0}``."""

    if branch.on_cut(y):
        raise DomainError(f"{y} lies on the branch cut along -beta")
    ctx = branch.prec.ctx
    value = ctx.mpc(_convert(ctx, y))
    return ctx.log(value / branch.beta) + branch.log_beta
