from fractions import Fraction

import mpmath
import pytest

from qpoch.core.errors import DomainError
from qpoch.special.zeta import zeta_even_rational, zeta_int


def test_even_zeta_is_rational_multiple_of_pi_power():
    assert zeta_even_rational(2) == (Fraction(1, 6), 1)
    assert zeta_even_rational(4) == (Fraction(1, 90), 2)
    with mpmath.workprec(400):
        for k in range(2, 31, 2):
            ratio, j = zeta_even_rational(k)
            assert 2 * j == k
            value = mpmath.mpf(ratio.numerator) / ratio.denominator * mpmath.pi ** (2 * j)
            assert abs(value - mpmath.zeta(k)) < mpmath.mpf(2) ** -250


@pytest.mark.parametrize("k", [2, 3, 5, 8, 11, 30, 51])
def test_zeta_int_matches_mpmath(prec, k):
    value = zeta_int(k, prec)
    with mpmath.workprec(400):
        reference = mpmath.zeta(k)
    assert abs(value - reference) < mpmath.mpf(2) ** -250


def test_zeta_int_domain(prec):
    with pytest.raises(DomainError):
        zeta_int(1, prec)
    with pytest.raises(DomainError):
        zeta_even_rational(3)
