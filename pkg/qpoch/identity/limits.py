"""Classical ``q -> 1`` limits used to validate the product and oracle routines."""

from __future__ import annotations

from typing import Any, Sequence

from qpoch.core.arith import Numeric, Precision
from qpoch.core.errors import DomainError
from qpoch.identity.qpoch import oracle_log_qpoch, qpoch_product
from qpoch.special.loggamma import log_gamma


def exp_limit_error(z: Numeric, beta: Numeric, prec: Precision) -> Any:
    """``|(z(q - 1); q)_inf - e^z|`` with ``q = e^-beta``."""

    ctx = prec.ctx
    zc = prec.complex(z)
    q = ctx.exp(-prec.complex(beta))
    return abs(qpoch_product(zc * (q - 1), q, prec) - ctx.exp(zc))


def dilog_limit_error(y: Numeric, beta: Numeric, prec: Precision) -> Any:
    """``|(q - 1) log(e^-y; q)_inf - Li_2(e^-y)|``, compared against mpmath's polylog."""

    ctx = prec.ctx
    yc = prec.complex(y)
    if yc.real <= 0:
        raise DomainError("dilog limit needs Re y > 0")
    q = ctx.exp(-prec.complex(beta))
    log_value = oracle_log_qpoch(yc, beta, prec).log_value
    return abs((q - 1) * log_value - ctx.polylog(2, ctx.exp(-yc)))


def gamma_limit_error(z: Numeric, beta: Numeric, prec: Precision) -> Any:
    """``|(q; q)(1 - q)^(1-z) / (q^z; q) - Gamma(z)|``."""

    ctx = prec.ctx
    zc = prec.complex(z)
    beta_c = prec.complex(beta)
    q = ctx.exp(-beta_c)
    log_num = oracle_log_qpoch(beta_c, beta_c, prec).log_value
    log_den = oracle_log_qpoch(zc * beta_c, beta_c, prec).log_value
    q_gamma = ctx.exp(log_num - log_den + (1 - zc) * ctx.log(1 - q))
    return abs(q_gamma - ctx.exp(log_gamma(zc, prec)))


def empirical_orders(betas: Sequence[Numeric], errors: Sequence[Any], prec: Precision) -> list[Any]:
    """Slopes ``log(e_i/e_{i+1}) / log(beta_i/beta_{i+1})`` between consecutive samples."""

    if len(betas) != len(errors):
        raise DomainError("betas and errors must have the same length")
    ctx = prec.ctx
    slopes = []
    for i in range(len(betas) - 1):
        ratio_beta = prec.real(betas[i]) / prec.real(betas[i + 1])
        slopes.append(ctx.log(errors[i] / errors[i + 1]) / ctx.log(ratio_beta))
    return slopes
