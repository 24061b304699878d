"""Serializable records for expansions, evaluations, checks and sweeps."""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field


class AtomRecord(BaseModel):
    """One factor of a symbolic term."""

    kind: str
    value: Optional[str] = None


class SymbolicTermRecord(BaseModel):
    coeff: str = Field(..., description="Exact rational coefficient as 'p/q'")
    atoms: list[AtomRecord]


class ExpansionDocument(BaseModel):
    """Expansion serialized with exact rationals as strings."""

    regime: str
    c: str
    cutoff: str
    terms: list[SymbolicTermRecord]
    note: str = ""


class GroupRecord(BaseModel):
    """Numeric value of the terms sharing one power of beta."""

    beta_exp: str
    value_re: str
    value_im: str


class EvalRecord(BaseModel):
    method: str
    y: str
    beta: str
    prec_bits: int
    log_value_re: str
    log_value_im: str
    tail_bound: str = Field(..., description="Certified or heuristic size of the omitted part")
    terms_used: int


class CheckRecord(BaseModel):
    check: str
    lhs_re: str
    lhs_im: str
    rhs_re: str
    rhs_im: str
    residual: str
    certified_tail: str


class EstimateRecord(BaseModel):
    regime: str
    formula_id: str
    n_star: str
    r_star: str
    c_const: str
    t: str


class SweepRowRecord(BaseModel):
    """One truncation order of a sweep; columns match the CSV header."""

    order: int
    beta_exp: str
    partial_re: str
    partial_im: str
    abs_error: str


class SweepMeta(BaseModel):
    regime: str
    c: str
    x: str
    beta: str
    prec_bits: int
    max_order: int


class SweepDocument(BaseModel):
    meta: SweepMeta
    rows: list[SweepRowRecord]
