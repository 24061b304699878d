"""Exact symbolic representation of expansion coefficients."""

from __future__ import annotations

import json
from collections import OrderedDict
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable

from qpoch.core.errors import DomainError
from qpoch.models import AtomRecord, ExpansionDocument, SymbolicTermRecord


class Regime(str, Enum):
    """Scaling regime of ``y = x beta^c`` as ``beta -> 0``."""

    UNIFORM = "uniform"
    C0 = "c0"
    C_SMALL = "c_small"
    C1 = "c1"
    C_LARGE = "c_large"


def regime_for(c: Fraction) -> Regime:
    if c < 0:
        raise DomainError(f"scaling exponent must be non-negative, got {c}")
    if c == 0:
        return Regime.C0
    if c < 1:
        return Regime.C_SMALL
    if c == 1:
        return Regime.C1
    return Regime.C_LARGE


class AtomKind(str, Enum):
    X_POW = "x_pow"
    BETA_EXP = "beta_exp"
    LOG_BETA = "log_beta"
    LOG_X = "log_x"
    LOG_2PI = "log_2pi"
    LOG_GAMMA_X = "log_gamma_x"
    EULER_GAMMA = "euler_gamma"
    PI_SQUARED = "pi_squared"
    ZETA_ODD = "zeta_odd"


# order of transcendental factors when sorting terms inside one beta power
_SORT_RANK = {
    AtomKind.LOG_BETA: 0,
    AtomKind.LOG_X: 1,
    AtomKind.LOG_GAMMA_X: 2,
    AtomKind.LOG_2PI: 3,
    AtomKind.EULER_GAMMA: 4,
    AtomKind.PI_SQUARED: 5,
    AtomKind.ZETA_ODD: 6,
}

# order of factors when printing a single term
_RENDER_ORDER = (
    AtomKind.PI_SQUARED,
    AtomKind.ZETA_ODD,
    AtomKind.EULER_GAMMA,
    AtomKind.X_POW,
    AtomKind.LOG_2PI,
    AtomKind.LOG_GAMMA_X,
    AtomKind.LOG_X,
    AtomKind.LOG_BETA,
)


@dataclass(frozen=True)
class SymbolAtom:
    kind: AtomKind
    value: Fraction | int | None = None

    def __post_init__(self) -> None:
        if self.kind is AtomKind.ZETA_ODD and (not isinstance(self.value, int) or self.value < 3 or self.value % 2 == 0):
            raise DomainError(f"zeta atom needs an odd integer >= 3, got {self.value}")
        if self.kind is AtomKind.PI_SQUARED and (not isinstance(self.value, int) or self.value < 1):
            raise DomainError(f"pi^2 atom needs a positive integer power, got {self.value}")
        if self.kind is AtomKind.X_POW and not isinstance(self.value, int):
            raise DomainError("x power must be an integer")

    def render(self) -> str:
        if self.kind is AtomKind.X_POW:
            return "x" if self.value == 1 else f"x^{self.value}"
        if self.kind is AtomKind.PI_SQUARED:
            return "pi^2" if self.value == 1 else f"pi^{2 * self.value}"
        if self.kind is AtomKind.ZETA_ODD:
            return f"zeta({self.value})"
        return {
            AtomKind.LOG_BETA: "log(beta)",
            AtomKind.LOG_X: "log(x)",
            AtomKind.LOG_2PI: "log(2*pi)",
            AtomKind.LOG_GAMMA_X: "loggamma(x)",
            AtomKind.EULER_GAMMA: "gamma",
        }[self.kind]


def _fraction_text(value: Fraction) -> str:
    return str(value)


@dataclass(frozen=True)
class SymbolicTerm:
    """``coeff * beta^beta_exp * x^x_pow * (transcendental factors)``."""

    coeff: Fraction
    beta_exp: Fraction
    x_pow: int = 0
    factors: tuple[SymbolAtom, ...] = ()

    def __post_init__(self) -> None:
        kinds = [atom.kind for atom in self.factors]
        if len(kinds) != len(set(kinds)):
            raise DomainError("a term may carry each transcendental factor at most once")
        if AtomKind.X_POW in kinds or AtomKind.BETA_EXP in kinds:
            raise DomainError("powers of x and beta are stored in their own fields")
        object.__setattr__(self, "factors", tuple(sorted(self.factors, key=lambda a: _SORT_RANK[a.kind])))

    @classmethod
    def build(
        cls,
        coeff: Fraction | int,
        beta_exp: Fraction | int,
        x_pow: int = 0,
        *,
        log_beta: bool = False,
        log_x: bool = False,
        log_2pi: bool = False,
        log_gamma_x: bool = False,
        euler_gamma: bool = False,
        pi_power: int = 0,
        zeta: int | None = None,
    ) -> "SymbolicTerm":
        factors: list[SymbolAtom] = []
        flags = (
            (log_beta, AtomKind.LOG_BETA),
            (log_x, AtomKind.LOG_X),
            (log_2pi, AtomKind.LOG_2PI),
            (log_gamma_x, AtomKind.LOG_GAMMA_X),
            (euler_gamma, AtomKind.EULER_GAMMA),
        )
        factors.extend(SymbolAtom(kind) for enabled, kind in flags if enabled)
        if pi_power:
            factors.append(SymbolAtom(AtomKind.PI_SQUARED, pi_power))
        if zeta is not None:
            factors.append(SymbolAtom(AtomKind.ZETA_ODD, zeta))
        return cls(Fraction(coeff), Fraction(beta_exp), x_pow, tuple(factors))

    @property
    def signature(self) -> tuple[Fraction, tuple[SymbolAtom, ...], int]:
        return self.beta_exp, self.factors, self.x_pow

    def sort_key(self) -> tuple:
        return (
            self.beta_exp,
            tuple((_SORT_RANK[a.kind], a.value or 0) for a in self.factors),
            self.x_pow,
        )

    def atoms(self) -> tuple[SymbolAtom, ...]:
        """All atoms, including the ``beta`` and ``x`` powers."""

        atoms = [SymbolAtom(AtomKind.BETA_EXP, self.beta_exp)]
        if self.x_pow:
            atoms.append(SymbolAtom(AtomKind.X_POW, self.x_pow))
        return tuple(atoms) + self.factors

    def render_magnitude(self) -> str:
        """Term without sign, e.g. ``1/3*zeta(3)*x^3``."""

        pieces = []
        by_kind = {atom.kind: atom for atom in self.factors}
        if self.x_pow:
            by_kind[AtomKind.X_POW] = SymbolAtom(AtomKind.X_POW, self.x_pow)
        for kind in _RENDER_ORDER:
            if kind in by_kind:
                pieces.append(by_kind[kind].render())
        magnitude = abs(self.coeff)
        if not pieces:
            return _fraction_text(magnitude)
        if magnitude != 1:
            pieces.insert(0, _fraction_text(magnitude))
        return "*".join(pieces)


def merge_terms(terms: Iterable[SymbolicTerm]) -> tuple[SymbolicTerm, ...]:
    """Combine terms with equal atoms and drop the ones that cancel."""

    merged: "OrderedDict[tuple, Fraction]" = OrderedDict()
    for term in terms:
        merged[term.signature] = merged.get(term.signature, Fraction(0)) + term.coeff
    result = [
        SymbolicTerm(coeff, beta_exp, x_pow, factors)
        for (beta_exp, factors, x_pow), coeff in merged.items()
        if coeff != 0
    ]
    return tuple(sorted(result, key=SymbolicTerm.sort_key))


@dataclass(frozen=True)
class Expansion:
    """Coefficients of a regime expansion up to ``cutoff_exp``, grouped by beta power."""

    regime: Regime
    c: Fraction
    cutoff_exp: Fraction
    terms: tuple[SymbolicTerm, ...] = field(default_factory=tuple)
    note: str = ""

    def exponents(self) -> list[Fraction]:
        return sorted({term.beta_exp for term in self.terms})

    def groups(self) -> "OrderedDict[Fraction, list[SymbolicTerm]]":
        grouped: "OrderedDict[Fraction, list[SymbolicTerm]]" = OrderedDict()
        for exponent in self.exponents():
            grouped[exponent] = []
        for term in self.terms:
            grouped[term.beta_exp].append(term)
        return grouped

    def render(self) -> str:
        """One line per beta power: ``beta^e: t1 + t2 - ...``."""

        lines = []
        for exponent, terms in self.groups().items():
            body = ""
            for index, term in enumerate(terms):
                text = term.render_magnitude()
                if index == 0:
                    body = f"-{text}" if term.coeff < 0 else text
                else:
                    body += f" - {text}" if term.coeff < 0 else f" + {text}"
            lines.append(f"beta^{_fraction_text(exponent)}: {body}")
        return "\n".join(lines)

    def to_document(self) -> ExpansionDocument:
        return ExpansionDocument(
            regime=self.regime.value,
            c=str(self.c),
            cutoff=str(self.cutoff_exp),
            note=self.note,
            terms=[
                SymbolicTermRecord(
                    coeff=str(term.coeff),
                    atoms=[
                        AtomRecord(kind=atom.kind.value, value=None if atom.value is None else str(atom.value))
                        for atom in term.atoms()
                    ],
                )
                for term in self.terms
            ],
        )

    def to_json(self) -> str:
        return json.dumps(self.to_document().model_dump(), indent=2)
