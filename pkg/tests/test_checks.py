from fractions import Fraction

import mpmath
import pytest

from qpoch.core.arith import Precision
from qpoch.core.errors import DomainError
from qpoch.identity.checks import (
    artin_product_check,
    consequence_check,
    dedekind_check,
    identity_check,
    theta_modular_check,
)


def _beta_values(prec):
    ctx = prec.ctx
    return [1, Fraction(1, 2), ctx.exp(ctx.mpc(0, ctx.pi / 6))]


@pytest.mark.parametrize("index", [0, 1, 2])
def test_dedekind_transformation(prec, index):
    report = dedekind_check(_beta_values(prec)[index], prec)
    assert report.check == "dedekind"
    assert report.residual < mpmath.mpf(10) ** -70


def test_dedekind_self_dual_point(prec):
    report = dedekind_check(2 * prec.ctx.pi, prec)
    assert report.residual < mpmath.mpf(10) ** -74


@pytest.mark.parametrize("x", [Fraction(1, 4), Fraction(1, 3)])
@pytest.mark.parametrize("index", [0, 1, 2])
def test_theta_transformation(prec, x, index):
    report = theta_modular_check(x, _beta_values(prec)[index], prec)
    assert report.residual < mpmath.mpf(10) ** -70


def test_theta_rejects_integer_points(prec):
    with pytest.raises(DomainError):
        theta_modular_check(2, 1, prec)


def test_artin_product_has_cubic_tail():
    prec = Precision(128)
    coarse = artin_product_check(Fraction(5, 2), 100, prec)
    fine = artin_product_check(Fraction(5, 2), 200, prec)
    assert 0.5 * coarse.certified_tail <= coarse.residual <= 1.1 * coarse.certified_tail
    assert 6 < coarse.residual / fine.residual < 10


def test_artin_domain(low_prec):
    with pytest.raises(DomainError):
        artin_product_check(-3, 10, low_prec)


def test_consequence_product(low_prec):
    report = consequence_check(1, Fraction(1, 4), 2000, low_prec)
    assert report.residual <= 2 * report.certified_tail * abs(report.rhs)


def test_identity_check_report(low_prec):
    report = identity_check(1, Fraction(1, 2), 3, 50, low_prec)
    assert report.residual <= report.certified_tail + mpmath.mpf(10) ** -30
