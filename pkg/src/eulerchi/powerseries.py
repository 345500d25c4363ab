"""Truncated exponential generating functions over Q(zeta).

A :class:`TruncatedEGF` holds ``c_0..c_L`` of ``sum c_n t^n / n!``.  Products
are binomial convolutions; every binary operation truncates to the smaller
order bound of its operands.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .exact_arith import CycloRational

__all__ = [
    "DEFAULT_TRUNCATION",
    "TruncatedEGF",
    "binomial_row",
    "default_truncation",
    "egf_exp",
    "egf_mul",
    "egf_div",
    "egf_scale_arg",
]

DEFAULT_TRUNCATION = 16
TRUNCATION_ENV = "EULERCHI_TRUNCATION"

Coefficient = Union[CycloRational, int, Fraction]


def default_truncation() -> int:
    """Library default order bound, overridable through ``EULERCHI_TRUNCATION``."""
    raw = os.environ.get(TRUNCATION_ENV)
    if not raw:
        return DEFAULT_TRUNCATION
    value = int(raw)
    if value < 0:
        raise ValueError(f"{TRUNCATION_ENV} must be nonnegative, got {value}")
    return value


_pascal: list[tuple[int, ...]] = [(1,)]
_pascal_lock = threading.Lock()


def binomial_row(n: int) -> tuple[int, ...]:
    """Row n of Pascal's triangle, built by iteration and cached."""
    rows = _pascal
    if n < len(rows):
        return rows[n]
    with _pascal_lock:
        while len(_pascal) <= n:
            prev = _pascal[-1]
            _pascal.append((1,) + tuple(a + b for a, b in zip(prev, prev[1:])) + (1,))
    return _pascal[n]


@dataclass(frozen=True)
class TruncatedEGF:
    coeffs: tuple[CycloRational, ...]

    def __init__(self, coeffs: Iterable[Coefficient]):
        cs = tuple(CycloRational.coerce(c) for c in coeffs)
        if not cs:
            raise ValueError("a truncated EGF needs at least the constant term")
        object.__setattr__(self, "coeffs", cs)

    @property
    def order_bound(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def constant(cls, c: Coefficient, L: int) -> TruncatedEGF:
        return cls([c] + [0] * L)

    def truncate(self, L: int) -> TruncatedEGF:
        if L > self.order_bound:
            raise ValueError(f"cannot extend a series of order {self.order_bound} to {L}")
        return TruncatedEGF(self.coeffs[: L + 1])

    def __getitem__(self, n: int) -> CycloRational:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Fraction, CycloRational)):
            return TruncatedEGF((self.coeffs[0] + other,) + self.coeffs[1:])
        if not isinstance(other, TruncatedEGF):
            return NotImplemented
        return TruncatedEGF(a + b for a, b in zip(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self) -> TruncatedEGF:
        return TruncatedEGF(-c for c in self.coeffs)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, CycloRational, TruncatedEGF)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloRational)):
            return TruncatedEGF(c * other for c in self.coeffs)
        if not isinstance(other, TruncatedEGF):
            return NotImplemented
        return egf_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, CycloRational)):
            return TruncatedEGF(c / other for c in self.coeffs)
        if not isinstance(other, TruncatedEGF):
            return NotImplemented
        return egf_div(self, other)

    def to_json(self) -> list:
        return [c.to_json() for c in self.coeffs]


def egf_exp(a: Coefficient, L: int) -> TruncatedEGF:
    """EGF of e^{a t}: coefficients a^0..a^L."""
    if L < 0:
        raise ValueError(f"truncation order must be nonnegative, got {L}")
    a = CycloRational.coerce(a)
    out = [CycloRational.from_rational(1)]
    for _ in range(L):
        out.append(out[-1] * a)
    return TruncatedEGF(out)


def egf_mul(f: TruncatedEGF, g: TruncatedEGF) -> TruncatedEGF:
    L = min(f.order_bound, g.order_bound)
    fc, gc = f.coeffs, g.coeffs
    out = []
    for n in range(L + 1):
        row = binomial_row(n)
        acc = CycloRational.from_rational(0)
        for i in range(n + 1):
            if fc[i] and gc[n - i]:
                acc = acc + fc[i] * gc[n - i] * row[i]
        out.append(acc)
    return TruncatedEGF(out)


def egf_div(f: TruncatedEGF, g: TruncatedEGF) -> TruncatedEGF:
    """The h with h * g == f up to the truncation order (forward substitution)."""
    if g.coeffs[0].is_zero():
        raise ZeroDivisionError("EGF divisor has zero constant term")
    L = min(f.order_bound, g.order_bound)
    inv0 = g.coeffs[0].inverse()
    gc = g.coeffs
    h: list[CycloRational] = []
    for n in range(L + 1):
        row = binomial_row(n)
        acc = f.coeffs[n]
        for i in range(n):
            if h[i] and gc[n - i]:
                acc = acc - h[i] * gc[n - i] * row[i]
        h.append(acc * inv0)
    return TruncatedEGF(h)


def egf_scale_arg(f: TruncatedEGF, w: Coefficient) -> TruncatedEGF:
    """Substitute t -> w t: coefficient n is multiplied by w^n."""
    out = []
    power = CycloRational.from_rational(1)
    for c in f.coeffs:
        out.append(c * power)
        power = power * w
    return TruncatedEGF(out)

