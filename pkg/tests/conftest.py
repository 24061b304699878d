"""Shared fixtures."""

from __future__ import annotations

import pytest

from qpoch.core.arith import Precision


@pytest.fixture
def prec() -> Precision:
    return Precision(256)


@pytest.fixture
def low_prec() -> Precision:
    return Precision(128)


@pytest.fixture
def deep_prec() -> Precision:
    return Precision(1024)
