import json
from fractions import Fraction

import pytest

from qpoch.core.errors import DomainError
from qpoch.expansions.coefficients import FIXED_Y_NOTE, regime_coefficients
from qpoch.expansions.symbolic import AtomKind, Regime, SymbolAtom, SymbolicTerm, merge_terms, regime_for

HALF_TABLE = "\n".join(
    [
        "beta^-1: -1/6*pi^2",
        "beta^-1/2: x - 1/2*x*log(beta) - x*log(x)",
        "beta^0: 1/4*x^2 + 1/4*log(beta) + 1/2*log(x)",
        "beta^1/2: -1/12*x^-1 - 1/4*x - 1/72*x^3",
        "beta^1: 1/24 + 1/48*x^2",
    ]
)

SQUARE_TABLE = "\n".join(
    [
        "beta^-1: -1/6*pi^2",
        "beta^0: 3/2*log(beta) + log(x) + 1/2*log(2*pi)",
        "beta^1: 1/24 - x*log(beta) + gamma*x",
        "beta^2: -1/4*x - 1/12*pi^2*x^2",
        "beta^3: -1/144*x + 1/4*x^2 + 1/3*zeta(3)*x^3",
    ]
)

UNIT_TABLE = "\n".join(
    [
        "beta^-1: -1/6*pi^2",
        "beta^0: 1/2*log(beta) - x*log(beta) - loggamma(x) + 1/2*log(2*pi)",
    ]
)


def test_small_c_table():
    assert regime_coefficients(Fraction(1, 2), 1).render() == HALF_TABLE


def test_large_c_table():
    assert regime_coefficients(2, 3).render() == SQUARE_TABLE


def test_unit_c_table():
    assert regime_coefficients(1, 0).render() == UNIT_TABLE


def test_unit_c_uses_bernoulli_polynomials():
    expansion = regime_coefficients(1, 2)
    groups = expansion.groups()
    # -B_1 B_2(x) / (1 * 2!) = (x^2 - x + 1/6) / 4
    first = {term.x_pow: term.coeff for term in groups[Fraction(1)]}
    assert first == {0: Fraction(1, 24), 1: Fraction(-1, 4), 2: Fraction(1, 4)}
    # -B_2 B_3(x) / (2 * 3!)
    second = {term.x_pow: term.coeff for term in groups[Fraction(2)]}
    assert second == {1: Fraction(-1, 144), 2: Fraction(1, 48), 3: Fraction(-1, 72)}


def test_regime_selection():
    assert regime_for(Fraction(0)) is Regime.C0
    assert regime_for(Fraction(1, 3)) is Regime.C_SMALL
    assert regime_for(Fraction(1)) is Regime.C1
    assert regime_for(Fraction(5, 2)) is Regime.C_LARGE
    with pytest.raises(DomainError):
        regime_for(Fraction(-1))


def test_fixed_y_has_no_symbolic_terms():
    expansion = regime_coefficients(0, 5)
    assert expansion.terms == ()
    assert expansion.note == FIXED_Y_NOTE


def test_cutoff_bounds_exponents():
    expansion = regime_coefficients(Fraction(3, 2), Fraction(7, 2))
    exponents = expansion.exponents()
    assert exponents[0] == -1
    assert max(exponents) <= Fraction(7, 2)
    assert all((2 * exponent).denominator == 1 for exponent in exponents)
    with pytest.raises(DomainError):
        regime_coefficients(2, -2)


def test_merge_combines_and_cancels():
    terms = [
        SymbolicTerm.build(Fraction(1, 3), 1, 2, log_beta=True),
        SymbolicTerm.build(Fraction(2, 3), 1, 2, log_beta=True),
        SymbolicTerm.build(Fraction(1, 2), 0),
        SymbolicTerm.build(Fraction(-1, 2), 0),
    ]
    merged = merge_terms(terms)
    assert len(merged) == 1
    assert merged[0].coeff == 1
    assert merged[0].render_magnitude() == "x^2*log(beta)"


def test_atom_validation():
    with pytest.raises(DomainError):
        SymbolAtom(AtomKind.ZETA_ODD, 4)
    with pytest.raises(DomainError):
        SymbolicTerm(Fraction(1), Fraction(0), 0, (SymbolAtom(AtomKind.LOG_X), SymbolAtom(AtomKind.LOG_X)))


def test_json_document_keeps_exact_rationals():
    document = json.loads(regime_coefficients(2, 3).to_json())
    assert document["regime"] == "c_large"
    assert document["c"] == "2"
    assert document["cutoff"] == "3"
    zeta_terms = [
        term for term in document["terms"] if any(atom["kind"] == "zeta_odd" for atom in term["atoms"])
    ]
    assert len(zeta_terms) == 1
    assert zeta_terms[0]["coeff"] == "1/3"
    kinds = {atom["kind"]: atom["value"] for atom in zeta_terms[0]["atoms"]}
    assert kinds == {"beta_exp": "3", "x_pow": "3", "zeta_odd": "3"}
