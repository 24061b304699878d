"""Optimal-truncation estimates for the divergent expansions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from qpoch.core.arith import Numeric, Precision, const_pi
from qpoch.core.errors import DomainError
from qpoch.expansions.symbolic import Regime


@dataclass(frozen=True)
class TruncEstimate:
    """Heuristic stopping order ``n_star`` and minimal error ``r_star``.

    ``c_const`` and ``t`` are the constants of the term model
    ``|T_n| ~ |C| (n-1)! t^n`` the estimate was derived from.
    """

    n_star: Any
    r_star: Any
    regime: Regime
    formula_id: str
    c_const: Any
    t: Any

    def brackets(self, beta_exp: Fraction | int, low: float = 0.8, high: float = 1.25) -> bool:
        """Whether truncating after ``beta^beta_exp`` lies in ``[low N*, high N*]``.

        ``N*`` counts powers of ``beta``; a sweep row on the ``1/q`` lattice of
        ``c = p/q`` must be compared through its ``beta_exp``, not its order.
        """

        exponent = float(beta_exp)
        n_star = float(self.n_star)
        return low * n_star <= exponent <= high * n_star


def heuristic_comparison(c_const: Any, t: Any, prec: Precision) -> tuple[Any, Any]:
    """``N* = 1/t`` and ``R* = |C| sqrt(2 pi t) e^(-1/t)`` for terms ``|C| (n-1)! t^n``."""

    ctx = prec.ctx
    t = prec.real(t)
    if t <= 0:
        raise DomainError("term ratio t must be positive")
    return 1 / t, abs(prec.real(c_const)) * ctx.sqrt(2 * const_pi(prec) * t) * ctx.exp(-1 / t)


def estimate_optimal(
    regime: Regime,
    x: Numeric,
    beta: Numeric,
    prec: Precision,
    c: Fraction | int = 0,
) -> TruncEstimate:
    """Estimate ``(N*, R*)`` for real ``x > 0``, ``beta > 0``.

    For the uniform expansion the argument is ``y = x beta^c``; the other
    regimes take ``x`` as the scaled variable. ``N*`` is measured in powers
    of ``beta`` for every regime; use :meth:`TruncEstimate.brackets` to set it
    against a sweep row.
    """

    ctx = prec.ctx
    x_r = prec.real(x)
    beta_r = prec.real(beta)
    if x_r <= 0 or beta_r <= 0:
        raise DomainError("estimates need real x > 0 and beta > 0")
    pi = const_pi(prec)
    c = Fraction(c)
    scale = ctx.mpf(1)
    if regime is Regime.UNIFORM:
        y = x_r * beta_r ** prec.real(c)
        radius = ctx.sqrt(y**2 + 4 * pi**2)
        c_const, t, formula = 2 / pi, beta_r / (2 * pi * radius), "uniform"
    elif regime is Regime.C0:
        c_const, t, formula = 1 / pi, beta_r / (2 * pi * x_r), "fixed-y"
    elif regime is Regime.C_SMALL:
        if not 0 < c < 1:
            raise DomainError(f"small-c estimate needs 0 < c < 1, got {c}")
        d = 1 - prec.real(c)
        c_const, t, formula = 1 / pi, beta_r**d / (2 * pi * x_r), "small-c"
        scale = d
    elif regime is Regime.C1:
        if (2 * x_r) == ctx.nint(2 * x_r):
            raise DomainError("c = 1 with 2x integer converges; use exact_remainder_c1")
        c_const, t, formula = 2 * ctx.sin(2 * pi * x_r) / pi, beta_r / (4 * pi**2), "unit-c"
    else:
        c_const, t, formula = 2 / pi, beta_r / (4 * pi**2), "large-c"
    n_star, r_star = heuristic_comparison(c_const, t, prec)
    return TruncEstimate(
        n_star=n_star * scale,
        r_star=r_star,
        regime=regime,
        formula_id=formula,
        c_const=c_const,
        t=t,
    )


def term_estimate_uniform(k: int, y: Numeric, beta: Numeric, prec: Precision) -> Any:
    """Size model ``4 (2k-2)! |beta|^(2k-1) / ((2 pi)^(2k) d^(2k-1))`` of ``T_k``, ``d`` the distance from ``y`` to ``+-2 pi i``."""

    if k < 1:
        raise DomainError("term index starts at 1")
    ctx = prec.ctx
    pi = const_pi(prec)
    yc = prec.complex(y)
    beta_abs = abs(prec.complex(beta))
    distance = min(abs(yc + ctx.mpc(0, 2 * pi)), abs(yc - ctx.mpc(0, 2 * pi)))
    return 4 * ctx.factorial(2 * k - 2) * beta_abs ** (2 * k - 1) / ((2 * pi) ** (2 * k) * distance ** (2 * k - 1))
