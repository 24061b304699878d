"""Parsing of numeric command-line input and request models."""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Literal, Optional

import click
from pydantic import BaseModel, ConfigDict, Field

from qpoch.core.arith import ExactComplex


def _parse_real(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot read {text!r} as a decimal or p/q rational") from exc


def _imaginary_split(text: str) -> int:
    """Index where the imaginary part of ``a+bi`` starts (0 for a pure ``bi``)."""

    for index in range(len(text) - 1, 0, -1):
        if text[index] in "+-" and text[index - 1] not in "eE":
            return index
    return 0


def parse_number(text: str) -> Fraction | ExactComplex:
    """Read ``a``, ``p/q``, ``a+bi``, ``a-bi`` or ``bi`` exactly.

    Real input becomes a :class:`~fractions.Fraction`, complex input an
    :class:`~qpoch.core.arith.ExactComplex` with rational parts.
    """

    cleaned = text.strip().replace(" ", "")
    if not cleaned:
        raise ValueError("empty number")
    if not cleaned.endswith(("i", "j")):
        return _parse_real(cleaned)
    body = cleaned[:-1]
    split = _imaginary_split(body)
    real_text, imag_text = body[:split], body[split:]
    if imag_text in ("", "+"):
        imag = Fraction(1)
    elif imag_text == "-":
        imag = Fraction(-1)
    else:
        imag = _parse_real(imag_text)
    real = _parse_real(real_text) if real_text else Fraction(0)
    if imag == 0:
        return real
    return ExactComplex(real, imag)


def as_integer(value: Fraction | ExactComplex | int) -> int:
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    raise ValueError(f"expected an integer, got {value}")


class NumberParam(click.ParamType):
    """Click type for real or complex exact input."""

    name = "number"

    def convert(self, value: Any, param: Optional[click.Parameter], ctx: Optional[click.Context]) -> Any:
        if isinstance(value, (Fraction, ExactComplex, int)):
            return value
        try:
            return parse_number(str(value))
        except ValueError as exc:
            self.fail(str(exc), param, ctx)


class RationalParam(click.ParamType):
    name = "rational"

    def convert(self, value: Any, param: Optional[click.Parameter], ctx: Optional[click.Context]) -> Any:
        if isinstance(value, (Fraction, int)):
            return Fraction(value)
        try:
            return _parse_real(str(value).strip())
        except ValueError as exc:
            self.fail(str(exc), param, ctx)


NUMBER = NumberParam()
RATIONAL = RationalParam()


class _Request(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)


class EvalRequest(_Request):
    method: Literal["oracle", "identity", "pv", "uniform", "regime"] = "oracle"
    y: Any = Field(..., description="Argument y of log(e^-y; e^-beta)_inf, or x for the regime method")
    beta: Any
    order: int = Field(default=4, ge=0, description="Stirling order N, uniform order, or regime cutoff")
    trunc: int = Field(default=200, ge=1, description="Gamma-product window M")
    c: Optional[Fraction] = Field(default=None, description="Scaling exponent for the regime method")


class VerifyRequest(_Request):
    check: Literal["dedekind", "theta", "artin", "consequence", "identity", "conv-series"]
    x: Optional[Any] = None
    y: Optional[Any] = None
    beta: Optional[Any] = None
    order: int = Field(default=4, ge=1)
    trunc: int = Field(default=200, ge=1)

    def require(self, *names: str) -> None:
        missing = [name for name in names if getattr(self, name) is None]
        if missing:
            raise click.UsageError(f"check {self.check!r} needs " + ", ".join(f"--{name}" for name in missing))


class ExpandRequest(_Request):
    c: Fraction
    cutoff: Fraction = Field(..., description="Largest power of beta kept")
    symbolic: bool = True
    x: Optional[Any] = None
    beta: Optional[Any] = None


class SweepRequest(_Request):
    regime: Literal["uniform", "c0", "c_small", "c1", "c_large"]
    x: Any
    beta: Any
    c: Fraction = Fraction(0)
    max_order: int = Field(..., ge=0)


class EstimateRequest(_Request):
    regime: Literal["uniform", "c0", "c_small", "c1", "c_large"]
    x: Any
    beta: Any
    c: Fraction = Fraction(0)
