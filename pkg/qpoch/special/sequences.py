"""Exact integer sequences: Bernoulli numbers, Bernoulli polynomials, Eulerian numbers."""

from __future__ import annotations

import logging
import math
import threading
from fractions import Fraction
from math import comb
from typing import Any

from qpoch.core.arith import Numeric, Precision, const_pi
from qpoch.core.errors import DomainError

logger = logging.getLogger(__name__)


def tangent_numbers(n: int) -> list[int]:
    """Tangent numbers ``T_1..T_n`` (``tan z = sum T_k z^(2k-1)/(2k-1)!``).

    Integer-only in-place recurrence, O(n^2) bigint operations.
    """

    if n <= 0:
        return []
    table = [0] * (n + 1)
    table[1] = 1
    for k in range(2, n + 1):
        table[k] = (k - 1) * table[k - 1]
    for k in range(2, n + 1):
        for j in range(k, n + 1):
            table[j] = (j - k) * table[j - 1] + (j - k + 2) * table[j]
    return table[1:]


class BernoulliTable:
    """Append-only cache of even-index Bernoulli numbers.

    Entries are immutable once stored; growth doubles the cached range and
    is serialized by a lock.
    """

    def __init__(self, initial: int = 64) -> None:
        self._even: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()
        self._grow(initial)

    def __len__(self) -> int:
        return len(self._even)

    def _grow(self, half_index: int) -> None:
        with self._lock:
            if half_index < len(self._even):
                return
            target = max(half_index, 2 * (len(self._even) - 1))
            logger.debug("Extending Bernoulli cache to B_%d", 2 * target)
            values = [Fraction(1)]
            for k, tangent in enumerate(tangent_numbers(target), start=1):
                four = 1 << (2 * k)
                sign = 1 if k % 2 == 1 else -1
                values.append(Fraction(sign * 2 * k * tangent, four * (four - 1)))
            self._even = values

    def even(self, half_index: int) -> Fraction:
        """Return ``B_{2*half_index}``."""

        if half_index >= len(self._even):
            self._grow(half_index)
        return self._even[half_index]


_TABLE = BernoulliTable()


def bernoulli_number(k: int) -> Fraction:
    """``B_k`` with ``B_1 = -1/2``."""

    if k < 0:
        raise DomainError(f"Bernoulli index must be non-negative, got {k}")
    if k == 1:
        return Fraction(-1, 2)
    if k % 2 == 1:
        return Fraction(0)
    return _TABLE.even(k // 2)


def bernoulli_poly_exact(n: int, x: Fraction | int) -> Fraction:
    """``B_n(x) = sum_k C(n,k) B_k x^(n-k)`` in exact arithmetic."""

    if n < 0:
        raise DomainError(f"polynomial degree must be non-negative, got {n}")
    x = Fraction(x)
    total = Fraction(0)
    for k in range(n + 1):
        b_k = bernoulli_number(k)
        if b_k:
            total += comb(n, k) * b_k * x ** (n - k)
    return total


def bernoulli_poly_coefficients(n: int) -> list[Fraction]:
    """Monomial coefficients of ``B_n(x)``, index ``p`` holding the ``x^p`` coefficient."""

    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] = comb(n, k) * bernoulli_number(k)
    return coeffs


def bernoulli_poly(n: int, x: Numeric, prec: Precision) -> Any:
    """Evaluate ``B_n(x)``; rational ``x`` is evaluated exactly before rounding."""

    if isinstance(x, (int, Fraction)):
        value = bernoulli_poly_exact(n, x)
        return prec.complex(value)
    coeffs = bernoulli_poly_coefficients(n)
    ctx = prec.ctx
    z = prec.complex(x)
    # absolute-value pass sizes the cancellation
    scale = sum(abs(ctx.mpf(c.numerator) / c.denominator) * abs(z) ** p for p, c in enumerate(coeffs) if c)
    extra = max(0, int(ctx.mag(scale))) + 8
    work = prec.raised(extra)
    wctx = work.ctx
    zw = work.complex(x)
    acc = wctx.mpc(0)
    for c in reversed(coeffs):
        acc = acc * zw + wctx.mpf(c.numerator) / c.denominator
    return prec.complex(acc)


def bernoulli_poly_fourier(n: int, x: Numeric, terms: int, prec: Precision) -> Any:
    """Fourier-type representation of ``B_n(x)`` for odd ``n >= 3`` and real ``x >= 0``.

    ``n * sum_{k<=floor(x)} (x-k)^(n-1) + 2(-1)^((n+1)/2) n! sum_{k<=K} sin(2 pi k x)/(2 pi k)^n``
    """

    if n < 3 or n % 2 == 0:
        raise DomainError(f"Fourier form needs odd n >= 3, got {n}")
    if terms < 1:
        raise DomainError("at least one Fourier term is required")
    ctx = prec.ctx
    xr = prec.real(x)
    if xr < 0:
        raise DomainError("Fourier form needs x >= 0")
    two_pi = 2 * const_pi(prec)
    polynomial = ctx.mpf(0)
    for k in range(1, int(ctx.floor(xr)) + 1):
        polynomial += (xr - k) ** (n - 1)
    fourier = ctx.mpf(0)
    for k in range(1, terms + 1):
        fourier += ctx.sin(two_pi * k * xr) / (two_pi * k) ** n
    sign = 1 if ((n + 1) // 2) % 2 == 0 else -1
    return n * polynomial + 2 * sign * math.factorial(n) * fourier


def bernoulli_poly_asymptotic(n: int, x: Numeric, prec: Precision) -> Any:
    """Leading large-``n`` approximation ``-2 n! cos(2 pi x - n pi/2)/(2 pi)^n`` for ``0 <= x <= 1``."""

    if n < 2:
        raise DomainError(f"asymptotic form needs n >= 2, got {n}")
    ctx = prec.ctx
    xr = prec.real(x)
    pi = const_pi(prec)
    return -2 * math.factorial(n) * ctx.cos(2 * pi * xr - n * pi / 2) / (2 * pi) ** n


def bernoulli_half_integer(n: int, x: Fraction | int = Fraction(1, 2)) -> Fraction:
    """``B_n(x)`` for ``x`` in ``Z>=0`` or ``1/2 + Z>=0`` from power sums.

    ``B_n(m) = B_n + n sum_{k<m} k^(n-1)`` and
    ``B_n(m + 1/2) = -(1 - 2^(1-n)) B_n + n sum_{k<m} (k + 1/2)^(n-1)``.
    """

    if n < 0:
        raise DomainError(f"degree must be non-negative, got {n}")
    x = Fraction(x)
    if x < 0 or (2 * x).denominator != 1:
        raise DomainError(f"power-sum form needs a non-negative integer or half-integer, got {x}")
    start = x - int(x)
    if start:
        base = -(1 - Fraction(2) ** (1 - n)) * bernoulli_number(n)
    else:
        base = bernoulli_number(n)
    if n == 0:
        return base
    return base + n * sum((start + k) ** (n - 1) for k in range(int(x)))


class EulerianTriangle:
    """Rows of Eulerian numbers ``<n, k>``, grown iteratively and cached."""

    def __init__(self) -> None:
        self._rows: list[list[int]] = [[1]]
        self._lock = threading.Lock()

    def row(self, n: int) -> list[int]:
        if n < 0:
            raise DomainError(f"Eulerian row must be non-negative, got {n}")
        if n >= len(self._rows):
            with self._lock:
                while len(self._rows) <= n:
                    m = len(self._rows)
                    prev = self._rows[-1]
                    current = []
                    for k in range(m):
                        same = prev[k] if k < len(prev) else 0
                        lower = prev[k - 1] if 1 <= k <= len(prev) else 0
                        current.append((k + 1) * same + (m - k) * lower)
                    self._rows.append(current)
        return self._rows[n]


_EULERIAN = EulerianTriangle()


def eulerian(n: int, k: int) -> int:
    """Eulerian number ``<n, k>``: permutations of ``n`` items with ``k`` ascents."""

    if n < 0:
        raise DomainError(f"Eulerian row must be non-negative, got {n}")
    if n == 0:
        return 1 if k == 0 else 0
    if k < 0 or k >= n:
        return 0
    return _EULERIAN.row(n)[k]
