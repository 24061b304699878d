from fractions import Fraction

import mpmath
import pytest

from qpoch.core.arith import Precision
from qpoch.core.errors import ConvergenceError, DomainError
from qpoch.expansions.coefficients import regime_coefficients
from qpoch.expansions.evaluate import group_values
from qpoch.expansions.remainder import conv_series_check, conv_series_terms, exact_remainder_c1
from qpoch.identity.qpoch import oracle_log_qpoch

BETA = Fraction(1, 16)


def test_exact_remainder_size(deep_prec):
    value = exact_remainder_c1(3, BETA, deep_prec)
    assert value.real < 0
    assert abs(float(mpmath.log10(abs(value))) + 274.32) < 0.01


def test_exact_remainder_half_integer_sign(deep_prec):
    value = exact_remainder_c1(Fraction(5, 2), BETA, deep_prec)
    assert value.real > 0


def test_exact_remainder_domain(prec):
    with pytest.raises(DomainError):
        exact_remainder_c1(Fraction(29, 10), BETA, prec)
    with pytest.raises(DomainError):
        exact_remainder_c1(0, BETA, prec)


@pytest.mark.parametrize("x,beta,bound", [(3, BETA, 1e-30), (2, Fraction(1, 8), 1e-20)])
def test_convergent_series_check(prec, x, beta, bound):
    report = conv_series_check(x, beta, prec)
    assert report.check == "conv-series"
    assert report.residual < bound


def test_convergent_series_rejects_large_beta(prec):
    with pytest.raises(ConvergenceError):
        conv_series_check(2, 10, prec)
    with pytest.raises(DomainError):
        conv_series_check(1, BETA, prec)


def test_series_terms_skip_odd_bernoulli(low_prec):
    terms = conv_series_terms(3, BETA, 5, low_prec)
    # n = 1, 2, 4
    assert len(terms) == 3


@pytest.mark.slow
def test_full_series_plus_remainder_matches_oracle(deep_prec):
    x = 3
    series = deep_prec.ctx.mpc(0)
    for _, value in group_values(regime_coefficients(1, 200), x, BETA, deep_prec):
        series += value
    oracle = oracle_log_qpoch(Fraction(3, 16), BETA, deep_prec).log_value
    remainder = exact_remainder_c1(x, BETA, deep_prec)
    assert abs(oracle - series - remainder) < mpmath.mpf(10) ** -280
    assert abs(oracle - series) > mpmath.mpf(10) ** -275
