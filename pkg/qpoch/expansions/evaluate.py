"""Numeric evaluation of regime expansions."""

from __future__ import annotations

import logging
import math
from collections import OrderedDict
from fractions import Fraction
from typing import Any

from qpoch.core.arith import (
    BranchContext,
    ExactComplex,
    Numeric,
    Precision,
    branched_log,
    const_euler_gamma,
    const_pi,
    principal_log,
)
from qpoch.core.errors import DomainError, ensure_finite
from qpoch.expansions.coefficients import regime_coefficients
from qpoch.expansions.symbolic import AtomKind, Expansion, Regime, SymbolAtom
from qpoch.identity.qpoch import QPochEval, validate_region
from qpoch.special.loggamma import log_gamma
from qpoch.special.polylog import li12_beta_branch, li_nonpos_exp
from qpoch.special.sequences import bernoulli_number
from qpoch.special.zeta import zeta_int

logger = logging.getLogger(__name__)


def _exact_rational(x: Numeric) -> Fraction | None:
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, ExactComplex) and x.is_real:
        return x.re
    return None


def fixed_y_terms(x: Numeric, beta: Numeric, max_exp: Fraction | int, prec: Precision) -> list[tuple[Fraction, Any]]:
    """Non-zero terms ``(-1)^(k-1) B_k Li_{2-k}(e^-x) beta^(k-1) / k!`` for ``k - 1 <= max_exp``.

    ``Li_1`` and ``Li_2`` use the beta branch along ``-beta``.
    """

    ctx = prec.ctx
    reduced, branch = validate_region(x, beta, prec)
    beta_c = branch.beta
    terms = [(Fraction(-1), -li12_beta_branch(2, reduced, branch, prec).value / beta_c)]
    if max_exp >= 0:
        terms.append((Fraction(0), -li12_beta_branch(1, reduced, branch, prec).value / 2))
    k = 2
    power = beta_c
    while k - 1 <= max_exp:
        b = bernoulli_number(k)
        if b:
            li = li_nonpos_exp(2 - k, reduced, prec)
            terms.append((Fraction(k - 1), -ctx.mpf(b.numerator) / (b.denominator * math.factorial(k)) * li * power))
        power *= beta_c
        k += 1
    return terms


class _AtomValues:
    """Numeric values of transcendental atoms for one ``(x, beta)`` pair."""

    def __init__(self, expansion: Expansion, x: Any, beta: Any, prec: Precision, euler_capacity: int) -> None:
        self._prec = prec
        self._x = x
        self._beta = beta
        self._log_beta = principal_log(beta, prec)
        self._x_branch = BranchContext.rotated(prec.ctx.exp((1 - prec.real(expansion.c)) * self._log_beta), prec)
        self._euler_capacity = euler_capacity
        self._cache: dict[SymbolAtom, Any] = {}

    @property
    def x_branch(self) -> BranchContext:
        return self._x_branch

    def beta_power(self, exponent: Fraction) -> Any:
        ctx = self._prec.ctx
        return ctx.exp(ctx.mpf(exponent.numerator) / exponent.denominator * self._log_beta)

    def value(self, atom: SymbolAtom) -> Any:
        if atom not in self._cache:
            self._cache[atom] = self._compute(atom)
        return self._cache[atom]

    def _compute(self, atom: SymbolAtom) -> Any:
        prec = self._prec
        ctx = prec.ctx
        if atom.kind is AtomKind.LOG_BETA:
            return self._log_beta
        if atom.kind is AtomKind.LOG_X:
            return branched_log(self._x, self._x_branch)
        if atom.kind is AtomKind.LOG_2PI:
            return ctx.log(2 * const_pi(prec))
        if atom.kind is AtomKind.LOG_GAMMA_X:
            shift = principal_log(self._x, prec) - branched_log(self._x, self._x_branch)
            return log_gamma(self._x, prec) - shift
        if atom.kind is AtomKind.EULER_GAMMA:
            return const_euler_gamma(prec, self._euler_capacity)
        if atom.kind is AtomKind.PI_SQUARED:
            return const_pi(prec) ** (2 * atom.value)
        if atom.kind is AtomKind.ZETA_ODD:
            return zeta_int(atom.value, prec)
        raise DomainError(f"unsupported atom {atom.kind}")


def _polynomial(coeffs: dict[int, Fraction], x: Numeric, exact: Fraction | None, prec: Precision) -> Any:
    if exact is not None:
        total = sum((coeff * exact**power for power, coeff in coeffs.items()), Fraction(0))
        return prec.complex(total)
    ctx = prec.ctx
    xc = prec.complex(x)
    scale = sum(abs(ctx.mpf(c.numerator) / c.denominator) * abs(xc) ** p for p, c in coeffs.items())
    work = prec.raised(max(0, int(ctx.mag(scale))) + 8)
    wctx = work.ctx
    xw = work.complex(xc)
    total = wctx.mpc(0)
    for power, coeff in coeffs.items():
        total += wctx.mpf(coeff.numerator) / coeff.denominator * xw**power
    return prec.complex(total)


def _validate_inputs(expansion: Expansion, x: Numeric, beta: Numeric, prec: Precision) -> tuple[Any, Any]:
    beta_c = BranchContext(prec.complex(beta), prec).beta
    xc = prec.complex(x)
    if expansion.regime is not Regime.C0 and xc == 0:
        raise DomainError("regime expansions need x != 0")
    return xc, beta_c


def group_values(
    expansion: Expansion,
    x: Numeric,
    beta: Numeric,
    prec: Precision,
    euler_capacity: int = 4096,
) -> list[tuple[Fraction, Any]]:
    """Value of each ``beta``-power group, in increasing exponent order.

    Rational ``x`` is substituted exactly into the polynomial part of every
    group before any rounding.
    """

    if expansion.regime is Regime.UNIFORM:
        raise DomainError("the uniform expansion is evaluated by uniform_expansion")
    xc, beta_c = _validate_inputs(expansion, x, beta, prec)
    if expansion.regime is Regime.C0:
        return fixed_y_terms(xc, beta_c, expansion.cutoff_exp, prec)
    atoms = _AtomValues(expansion, xc, beta_c, prec, euler_capacity)
    if atoms.x_branch.on_cut(xc):
        raise DomainError("x lies on the cut beta^(1-c) * R<=0")
    exact = _exact_rational(x)
    buckets: "OrderedDict[tuple, dict[int, Fraction]]" = OrderedDict()
    for term in expansion.terms:
        key = (term.beta_exp, term.factors)
        poly = buckets.setdefault(key, {})
        poly[term.x_pow] = poly.get(term.x_pow, Fraction(0)) + term.coeff
    grouped: "OrderedDict[Fraction, Any]" = OrderedDict()
    for (exponent, factors), coeffs in buckets.items():
        value = _polynomial(coeffs, xc, exact, prec)
        for atom in factors:
            value *= atoms.value(atom)
        value *= atoms.beta_power(exponent)
        grouped[exponent] = grouped.get(exponent, 0) + value
    return [(exponent, ensure_finite(value, "group_values")) for exponent, value in grouped.items()]


def _next_group_scale(expansion: Expansion, x: Numeric, beta: Numeric, prec: Precision, euler_capacity: int) -> Any:
    extended = regime_coefficients(expansion.c, expansion.cutoff_exp + 2)
    for exponent, value in group_values(extended, x, beta, prec, euler_capacity):
        if exponent > expansion.cutoff_exp:
            return abs(value)
    return prec.ctx.mpf(0)


def regime_eval(
    expansion: Expansion,
    x: Numeric,
    beta: Numeric,
    prec: Precision,
    euler_capacity: int = 4096,
) -> QPochEval:
    """Sum of all groups up to the cutoff; the tail value is the size of the first omitted group."""

    groups = group_values(expansion, x, beta, prec, euler_capacity)
    total = prec.ctx.mpc(0)
    for _, value in groups:
        total += value
    tail = _next_group_scale(expansion, x, beta, prec, euler_capacity)
    logger.debug("Regime %s evaluated with %d groups", expansion.regime.value, len(groups))
    return QPochEval(log_value=total, tail_bound=tail, terms_used=len(groups))
