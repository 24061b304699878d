from fractions import Fraction

import mpmath
import pytest

from qpoch.core.arith import Precision
from qpoch.core.errors import DomainError
from qpoch.identity.gamma_product import identity_rhs, identity_rhs_pv
from qpoch.identity.qpoch import oracle_log_qpoch

SLACK = mpmath.mpf(10) ** -60


def _betas(prec):
    ctx = prec.ctx
    return [Fraction(1, 4), Fraction(1, 16), ctx.exp(ctx.mpc(0, ctx.pi / 6)) / 8]


@pytest.mark.parametrize("y", [Fraction(3, 10), 1, "2+i"])
@pytest.mark.parametrize("beta_index", [0, 1, 2])
def test_identity_closes_on_grid(prec, y, beta_index):
    beta = _betas(prec)[beta_index]
    if y == "2+i":
        y = prec.ctx.mpc(2, 1)
    rhs = identity_rhs(y, beta, 4, 200, prec)
    oracle = oracle_log_qpoch(y, beta, prec)
    assert rhs.terms_used == 401
    assert abs(rhs.log_value - oracle.log_value) <= rhs.tail_bound + oracle.tail_bound + SLACK


def test_identity_tail_bound_tracks_window(low_prec):
    y, beta = 1, Fraction(1, 2)
    oracle = oracle_log_qpoch(y, beta, low_prec).log_value
    small = identity_rhs(y, beta, 1, 5, low_prec)
    large = identity_rhs(y, beta, 1, 40, low_prec)
    assert large.tail_bound < small.tail_bound
    assert abs(small.log_value - oracle) <= small.tail_bound
    assert abs(large.log_value - oracle) <= large.tail_bound


def test_identity_needs_positive_order_and_window(low_prec):
    with pytest.raises(DomainError):
        identity_rhs(1, Fraction(1, 2), 0, 10, low_prec)
    with pytest.raises(DomainError):
        identity_rhs(1, Fraction(1, 2), 2, 0, low_prec)


def test_principal_value_form_converges_like_one_over_window():
    prec = Precision(128)
    y, beta = 1, Fraction(1, 4)
    oracle = oracle_log_qpoch(y, beta, prec).log_value
    coarse = identity_rhs_pv(y, beta, 100, prec)
    fine = identity_rhs_pv(y, beta, 400, prec)
    error_coarse = abs(coarse.log_value - oracle)
    error_fine = abs(fine.log_value - oracle)
    assert 3.5 < error_coarse / error_fine < 4.5
    assert fine.tail_bound < coarse.tail_bound
