from fractions import Fraction

import mpmath
import pytest

from qpoch.core.arith import (
    BranchContext,
    ExactComplex,
    Precision,
    branched_log,
    const_euler_gamma,
    const_pi,
    coth,
    exp,
    is_integer_like,
    pow,
    principal_log,
    reduce_strip,
)
from qpoch.core.errors import DomainError, PrecisionError


def test_precision_rejects_small_bit_counts():
    with pytest.raises(PrecisionError):
        Precision(32)


def test_contexts_are_isolated(prec):
    before = mpmath.mp.prec
    value = const_pi(prec)
    assert mpmath.mp.prec == before
    assert prec.ctx.prec == prec.working_bits
    with mpmath.workprec(400):
        assert abs(value - mpmath.pi) < mpmath.mpf(2) ** -250


def test_rationals_convert_exactly(prec):
    third = prec.real(Fraction(1, 3))
    assert abs(3 * third - 1) < prec.eps
    value = prec.complex(ExactComplex(Fraction(1, 2), Fraction(-3, 4)))
    assert value.real == prec.ctx.mpf(1) / 2
    assert value.imag == prec.ctx.mpf(-3) / 4


def test_real_rejects_complex(prec):
    with pytest.raises(DomainError):
        prec.real(ExactComplex(Fraction(1), Fraction(1)))


def test_exact_complex_text():
    assert str(ExactComplex(Fraction(2), Fraction(1))) == "2+1i"
    assert str(ExactComplex(Fraction(1, 2), Fraction(-3))) == "1/2-3i"
    assert str(ExactComplex(Fraction(5))) == "5"


def test_euler_gamma_capacity(prec):
    gamma = const_euler_gamma(prec)
    with mpmath.workprec(400):
        assert abs(gamma - mpmath.euler) < mpmath.mpf(2) ** -250
    with pytest.raises(PrecisionError):
        const_euler_gamma(Precision(512), capacity_bits=256)


def test_euler_gamma_matches_harmonic_limit(low_prec):
    # H_n - log n - 1/(2n) + 1/(12 n^2) = gamma + O(n^-4)
    ctx = low_prec.ctx
    n = 1000
    harmonic = ctx.fsum(ctx.mpf(1) / k for k in range(1, n + 1))
    approx = harmonic - ctx.log(n) - ctx.mpf(1) / (2 * n) + ctx.mpf(1) / (12 * n**2)
    assert abs(approx - const_euler_gamma(low_prec)) < ctx.mpf(10) ** -13


def test_principal_log_and_pow(prec):
    with pytest.raises(DomainError):
        principal_log(0, prec)
    assert pow(0, 2, prec) == 0
    with pytest.raises(DomainError):
        pow(0, -1, prec)
    value = pow(-1, Fraction(1, 2), prec)
    assert abs(value - prec.ctx.mpc(0, 1)) < prec.eps


def test_coth_rejects_poles(prec):
    with pytest.raises(DomainError):
        coth(prec.ctx.mpc(0, prec.ctx.pi), prec)
    assert abs(coth(1, prec) - prec.ctx.coth(1)) < prec.eps


def test_reduce_strip_is_half_open(prec):
    ctx = prec.ctx
    pi = const_pi(prec)
    reduced, winding = reduce_strip(ctx.mpc(1, 7), prec)
    assert winding == 1
    assert abs(reduced - ctx.mpc(1, 7 - 2 * pi)) < prec.eps
    top, winding = reduce_strip(ctx.mpc(0, pi), prec)
    assert winding == 0 and top.imag == pi
    bottom, winding = reduce_strip(ctx.mpc(0, -pi), prec)
    assert winding == -1
    assert abs(bottom.imag - pi) < prec.eps


def test_integer_like(prec):
    assert is_integer_like(3, prec)
    assert not is_integer_like(Fraction(1, 2), prec)
    assert not is_integer_like(ExactComplex(Fraction(1), Fraction(1)), prec)


def test_branch_context_validation(prec):
    with pytest.raises(DomainError):
        BranchContext(0, prec)
    with pytest.raises(DomainError):
        BranchContext(prec.ctx.mpc(-1, 1), prec)
    rotated = BranchContext.rotated(prec.ctx.mpc(-1, 1), prec)
    assert not rotated.strict


def test_branched_log_follows_rotated_cut(prec):
    ctx = prec.ctx
    branch = BranchContext(ctx.mpc(1, 1) / ctx.sqrt(2), prec)
    # -1 is on the principal cut but not on the ray along -beta
    value = branched_log(-1, branch)
    assert abs(value.real) < prec.eps
    assert abs(abs(value.imag) - const_pi(prec)) < prec.eps
    with pytest.raises(DomainError):
        branched_log(-branch.beta * 3, branch)
    positive = branched_log(2, BranchContext(1, prec))
    assert abs(positive - ctx.log(2)) < prec.eps


@pytest.mark.parametrize("re", [-20, -1, 0, Fraction(1, 2), 30])
@pytest.mark.parametrize("im", [-3, -1, 0, 2, 3])
def test_exp_inverts_principal_log_over_the_strip(prec, re, im):
    ctx = prec.ctx
    w = prec.complex(ExactComplex(Fraction(re), Fraction(im)))
    z = ctx.exp(w)
    ulp = ctx.ldexp(abs(z), -prec.bits)
    assert abs(exp(principal_log(z, prec), prec) - z) <= 4 * ulp
    assert abs(principal_log(z, prec) - w) <= 4 * ctx.ldexp(max(1, abs(w)), -prec.bits)


def test_exp_inverts_principal_log_for_exact_inputs(prec):
    for z in (ExactComplex(Fraction(-2), Fraction(0)), ExactComplex(Fraction(1, 3), Fraction(-5)), Fraction(7, 8)):
        target = prec.complex(z)
        assert abs(exp(principal_log(z, prec), prec) - target) <= 4 * prec.ctx.ldexp(abs(target), -prec.bits)
