"""Classical Euler numbers and polynomials.

Convention: ``E_n`` are the coefficients of ``2 / (e^t + 1)`` as an
exponential generating function, so ``E_1 = -1/2, E_3 = 1/4``.  These are the
values ``E_n(0)`` of the Euler polynomials, not the integer secant numbers.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .powerseries import binomial_row
from .xpoly import XPoly

__all__ = ["XPoly", "clear_cache", "euler_numbers", "euler_polynomial", "euler_poly_eval"]

_numbers: tuple[Fraction, ...] = (Fraction(1),)
_lock = threading.Lock()


def clear_cache() -> None:
    global _numbers
    with _lock:
        _numbers = (Fraction(1),)


def euler_numbers(N: int) -> list[Fraction]:
    """E_0..E_N from ``(E + 1)^n + E_n = 0`` for n >= 1, solved forward."""
    global _numbers
    if N < 0:
        raise ValueError(f"N must be nonnegative, got {N}")
    table = _numbers
    if N < len(table):
        return list(table[: N + 1])
    with _lock:
        table = list(_numbers)
        for n in range(len(table), N + 1):
            row = binomial_row(n)
            s = sum((row[l] * table[l] for l in range(n)), Fraction(0))
            table.append(-s / 2)
        # publish a complete prefix in one assignment
        _numbers = tuple(table)
    return table[: N + 1]


def euler_polynomial(n: int) -> XPoly:
    """E_n(x) = sum_l C(n, l) x^(n-l) E_l."""
    E = euler_numbers(n)
    row = binomial_row(n)
    return XPoly(row[n - i] * E[n - i] for i in range(n + 1))


def euler_poly_eval(n: int, r: Fraction) -> Fraction:
    """E_n(r) for rational r, by Horner's rule on the rational coefficients."""
    E = euler_numbers(n)
    row = binomial_row(n)
    r = Fraction(r)
    acc = Fraction(0)
    for i in range(n, -1, -1):
        acc = acc * r + row[n - i] * E[n - i]
    return acc
