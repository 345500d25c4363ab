"""Generalized Euler numbers and polynomials attached to a Dirichlet character.

``E_{n,chi}(x)`` are the EGF coefficients of

    2 * sum_{l<d} (-1)^l chi(l) e^{lt} / (e^{dt} + 1) * e^{xt}.

Two independent routes compute ``E_{n,chi}``: the closed form
``d^n * sum_a (-1)^a chi(a) E_n(a/d)`` (fast, used everywhere) and a direct
EGF division (:func:`gen_euler_gf_oracle`).  The closed form is only trusted
because the tests hold it equal to the oracle.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .dirichlet import Character
from .euler_classical import euler_poly_eval
from .exact_arith import CycloRational, is_prime
from .powerseries import TruncatedEGF, binomial_row, egf_div, egf_exp
from .xpoly import XPoly

__all__ = [
    "GenEulerTable",
    "gen_euler_numbers",
    "gen_euler_gf_oracle",
    "gen_euler_series",
    "gen_euler_poly",
    "poly_compose_affine",
    "alternating_power_sum",
    "fermionic_partial_sum",
    "check_fermionic_prime",
    "clear_cache",
]


@dataclass(frozen=True)
class GenEulerTable:
    character: Character
    max_n: int
    numbers: tuple[CycloRational, ...]

    def __getitem__(self, n: int) -> CycloRational:
        return self.numbers[n]

    def to_json(self) -> dict:
        return {
            "character": self.character.to_json(),
            "max_n": self.max_n,
            "numbers": [v.to_json() for v in self.numbers],
        }


_tables: dict[tuple, tuple[CycloRational, ...]] = {}
_polys: dict[tuple, XPoly] = {}
_lock = threading.Lock()


def clear_cache() -> None:
    with _lock:
        _tables.clear()
        _polys.clear()


def _closed_form(chi: Character, n: int) -> CycloRational:
    d = chi.modulus
    acc = CycloRational.from_rational(0)
    scale = d**n
    for a in range(d):
        v = chi.values[a]
        if v.is_zero():
            continue
        term = euler_poly_eval(n, Fraction(a, d)) * scale
        acc = acc + v * (term if a % 2 == 0 else -term)
    return acc


def gen_euler_numbers(chi: Character, N: int) -> GenEulerTable:
    """E_{0,chi}..E_{N,chi}; tables are memoized per character and only grow."""
    if N < 0:
        raise ValueError(f"N must be nonnegative, got {N}")
    cached = _tables.get(chi.key, ())
    if len(cached) <= N:
        with _lock:
            cached = _tables.get(chi.key, ())
            extra = tuple(_closed_form(chi, n) for n in range(len(cached), N + 1))
            cached = cached + extra
            _tables[chi.key] = cached
    return GenEulerTable(chi, N, cached[: N + 1])


def gen_euler_series(chi: Character, L: int) -> TruncatedEGF:
    """The defining EGF of E_{n,chi} built by series division, to order L."""
    d = chi.modulus
    numerator = TruncatedEGF.constant(0, L)
    for l in range(d):
        v = chi.values[l]
        if v.is_zero():
            continue
        numerator = numerator + egf_exp(l, L) * (2 * v if l % 2 == 0 else -2 * v)
    denominator = egf_exp(d, L) + 1
    return egf_div(numerator, denominator)


def gen_euler_gf_oracle(chi: Character, N: int) -> list[CycloRational]:
    return list(gen_euler_series(chi, N).coeffs)


def gen_euler_poly(chi: Character, n: int) -> XPoly:
    """E_{n,chi}(x) = sum_i C(n, i) E_{i,chi} x^(n-i)."""
    key = (chi.key, n)
    poly = _polys.get(key)
    if poly is None:
        E = gen_euler_numbers(chi, n).numbers
        row = binomial_row(n)
        poly = XPoly(E[n - j] * row[j] for j in range(n + 1))
        _polys[key] = poly
    return poly


def poly_compose_affine(
    P: XPoly, w: Union[int, Fraction], c: Union[int, Fraction, CycloRational]
) -> XPoly:
    """P(w*x + c) as an expanded polynomial."""
    return P.compose_affine(w, c)


def alternating_power_sum(chi: Character, k: int, n: int) -> CycloRational:
    """T_{k,chi}(n) = 2 * sum_{l=0}^{n} (-1)^l chi(l) l^k, with 0^0 = 1."""
    if k < 0 or n < 0:
        raise ValueError(f"k and n must be nonnegative, got k={k}, n={n}")
    acc = CycloRational.from_rational(0)
    for l in range(n + 1):
        v = chi(l)
        if v.is_zero():
            continue
        term = 2 * l**k
        acc = acc + v * (term if l % 2 == 0 else -term)
    return acc


def check_fermionic_prime(p: int, d: int) -> None:
    if p % 2 == 0 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if math.gcd(p, d) != 1:
        raise ValueError(f"p={p} divides the modulus d={d}")


def fermionic_partial_sum(
    chi: Character, k: int, p: int, N: int, x: Union[int, Fraction] = 0
) -> CycloRational:
    """S_N = sum_{y=0}^{d p^N - 1} chi(y) (x + y)^k (-1)^y, exactly.

    The inner sums over y are accumulated as integers per residue class mod d
    and the binomial expansion of (x + y)^k is done symbolically in x.
    """
    d = chi.modulus
    check_fermionic_prime(p, d)
    if N < 1 or k < 0:
        raise ValueError(f"need N >= 1 and k >= 0, got N={N}, k={k}")
    x = Fraction(x)
    # sums[a][i] = sum over y == a (mod d) of (-1)^y y^i
    sums = [[0] * (k + 1) for _ in range(d)]
    for y in range(d * p**N):
        row = sums[y % d]
        sign = -1 if y & 1 else 1
        power = sign
        for i in range(k + 1):
            row[i] += power
            power *= y
    binom = binomial_row(k)
    acc = CycloRational.from_rational(0)
    for a in range(d):
        v = chi.values[a]
        if v.is_zero():
            continue
        inner = sum(
            (binom[i] * x ** (k - i) * sums[a][i] for i in range(k + 1)), Fraction(0)
        )
        acc = acc + v * inner
    return acc
