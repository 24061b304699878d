from fractions import Fraction

import mpmath
import pytest

from qpoch.core.arith import Precision
from qpoch.core.errors import DomainError
from qpoch.estimates import term_estimate_uniform
from qpoch.expansions.coefficients import raw_terms, regime_coefficients
from qpoch.expansions.evaluate import fixed_y_terms, group_values, regime_eval
from qpoch.expansions.symbolic import Expansion, Regime
from qpoch.expansions.uniform import uniform_expansion, uniform_head, uniform_terms
from qpoch.identity.qpoch import oracle_log_qpoch
from qpoch.sources.base import scaled_argument

BETA = Fraction(1, 16)


def _error(value, y, beta, prec):
    return abs(value - oracle_log_qpoch(y, beta, prec).log_value)


def test_fixed_y_expansion_at_forty_terms(prec):
    result = regime_eval(regime_coefficients(0, 40), 1, BETA, prec)
    assert _error(result.log_value, 1, BETA, prec) < mpmath.mpf(10) ** -20


def test_fixed_y_terms_skip_vanishing_bernoulli_numbers(prec):
    exponents = [exponent for exponent, _ in fixed_y_terms(3, BETA, 7, prec)]
    assert exponents == [-1, 0, 1, 3, 5, 7]


def test_small_c_error_drops_with_cutoff(prec):
    y = 3 * prec.ctx.sqrt(prec.real(BETA))
    errors = [
        _error(regime_eval(regime_coefficients(Fraction(1, 2), cutoff), 3, BETA, prec).log_value, y, BETA, prec)
        for cutoff in (Fraction(1, 2), Fraction(3, 2), Fraction(5, 2))
    ]
    assert errors[0] > errors[1] > errors[2]


def test_unit_c_series_converges_at_half_integers(prec):
    x = Fraction(5, 2)
    result = regime_eval(regime_coefficients(1, 40), x, BETA, prec)
    assert _error(result.log_value, x * BETA, BETA, prec) < mpmath.mpf(10) ** -60


def test_large_c_expansion(prec):
    result = regime_eval(regime_coefficients(2, 10), 3, BETA, prec)
    assert _error(result.log_value, Fraction(3, 256), BETA, prec) < mpmath.mpf(10) ** -18
    assert result.tail_bound > 0


def test_large_c_expansion_complex_x(prec):
    x = prec.ctx.mpc(1, 1)
    result = regime_eval(regime_coefficients(2, 10), x, BETA, prec)
    assert _error(result.log_value, x / 256, BETA, prec) < mpmath.mpf(10) ** -18


def test_rational_x_is_substituted_exactly(prec):
    expansion = regime_coefficients(2, 6)
    exact = group_values(expansion, Fraction(3), BETA, prec)
    numeric = group_values(expansion, prec.real(3), BETA, prec)
    assert [e for e, _ in exact] == [e for e, _ in numeric]
    for (_, a), (_, b) in zip(exact, numeric):
        assert abs(a - b) < mpmath.mpf(10) ** -70 * max(1, abs(a))


def test_group_values_domain(prec):
    with pytest.raises(DomainError):
        group_values(Expansion(regime=Regime.UNIFORM, c=Fraction(0), cutoff_exp=Fraction(1)), 1, BETA, prec)
    with pytest.raises(DomainError):
        group_values(regime_coefficients(2, 3), 0, BETA, prec)


def test_uniform_expansion_near_origin(prec):
    y = Fraction(3, 256)
    result = uniform_expansion(y, BETA, 3, prec)
    assert _error(result.log_value, y, BETA, prec) < mpmath.mpf(10) ** -10


def test_uniform_error_falls_with_order(prec):
    low = uniform_expansion(3, BETA, 1, prec)
    high = uniform_expansion(3, BETA, 5, prec)
    assert _error(high.log_value, 3, BETA, prec) < _error(low.log_value, 3, BETA, prec)


def test_uniform_tail_value_is_next_term(prec):
    result = uniform_expansion(1, BETA, 3, prec)
    assert _error(result.log_value, 1, BETA, prec) <= 1.5 * result.tail_bound
    assert result.terms_used == 3


def test_uniform_complex_beta(prec):
    ctx = prec.ctx
    beta = ctx.exp(ctx.mpc(0, ctx.pi / 6)) / 8
    result = uniform_expansion(1, beta, 6, prec)
    assert _error(result.log_value, 1, beta, prec) < mpmath.mpf(10) ** -20


def test_uniform_terms_follow_size_model(prec):
    terms = uniform_terms(1, BETA, 20, prec)
    estimate = term_estimate_uniform(20, 1, BETA, prec)
    assert abs(terms[-1]) <= estimate * (1 + mpmath.mpf(10) ** -6)


def test_uniform_head_and_order_zero_agree(prec):
    assert abs(uniform_expansion(1, BETA, 0, prec).log_value - uniform_head(1, BETA, prec)) == 0
    with pytest.raises(DomainError):
        uniform_expansion(1, BETA, -1, Precision(64))


@pytest.mark.parametrize("c", [Fraction(1, 3), Fraction(1, 2), Fraction(3, 2), Fraction(2)])
@pytest.mark.parametrize("x", [Fraction(3), Fraction(7, 5)])
def test_merging_keeps_the_value(prec, c, x):
    merged = regime_coefficients(c, 2)
    total = sum(value for _, value in group_values(merged, x, BETA, prec))
    pieces = []
    for term in raw_terms(c, 2):
        single = Expansion(regime=merged.regime, c=c, cutoff_exp=merged.cutoff_exp, terms=(term,))
        pieces.extend(value for _, value in group_values(single, x, BETA, prec))
    scale = max(1, sum(abs(piece) for piece in pieces))
    assert len(pieces) >= len(merged.terms)
    assert abs(sum(pieces) - total) <= prec.ctx.ldexp(scale, -prec.bits + 16)


@pytest.mark.parametrize("c", [Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2)])
def test_uniform_and_regime_expansions_overlap(prec, c):
    beta = Fraction(1, 64)
    x = 3
    uniform = uniform_expansion(scaled_argument(x, beta, c, prec), beta, 6, prec)
    regime = regime_eval(regime_coefficients(c, 11), x, beta, prec)
    # each tail value is the first omitted group; later groups add a geometric fraction of it
    assert abs(uniform.log_value - regime.log_value) <= 2 * (uniform.tail_bound + regime.tail_bound)
