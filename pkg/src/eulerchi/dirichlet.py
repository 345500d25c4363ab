"""Dirichlet characters of odd modulus with exact cyclotomic values."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .exact_arith import CycloRational, euler_phi, factorize

__all__ = [
    "UnitGroup",
    "Character",
    "unit_group_structure",
    "enumerate_characters",
    "primitive_characters",
    "select_characters",
    "chi_eval",
    "conductor",
    "induced_character",
]


def _check_modulus(d: int) -> None:
    if not isinstance(d, int) or d < 1:
        raise ValueError(f"modulus must be a positive integer, got {d!r}")
    if d % 2 == 0:
        raise ValueError(f"only odd moduli are supported, got {d}")


def _multiplicative_order(g: int, n: int) -> int:
    k, x = 1, g % n
    while x != 1:
        x = x * g % n
        k += 1
    return k


@dataclass(frozen=True)
class UnitGroup:
    """(Z/dZ)^x as a direct product of cyclic groups, one per prime power of d."""

    modulus: int
    generators: tuple[int, ...]
    orders: tuple[int, ...]

    @property
    def size(self) -> int:
        return math.prod(self.orders)

    @property
    def exponent(self) -> int:
        return math.lcm(*self.orders) if self.orders else 1

    def element(self, exponents: tuple[int, ...]) -> int:
        x = 1 % self.modulus if self.modulus > 1 else 0
        for g, e in zip(self.generators, exponents):
            x = x * pow(g, e, self.modulus) % self.modulus
        return x


@lru_cache(maxsize=None)
def unit_group_structure(d: int) -> UnitGroup:
    """Generators and orders of (Z/dZ)^x for odd d.

    A primitive root is found for each prime-power factor by exhaustive order
    testing and lifted to a residue mod d with CRT (1 on the other factors).
    """
    _check_modulus(d)
    gens, orders = [], []
    for p, e in factorize(d).items() if d > 1 else ():
        q = p**e
        phi = euler_phi(q)
        root = next(g for g in range(2, q) if math.gcd(g, p) == 1 and _multiplicative_order(g, q) == phi)
        rest = d // q
        # g == root (mod q), g == 1 (mod rest)
        g = (root * rest * pow(rest, -1, q) + q * pow(q, -1, rest)) % d if rest > 1 else root
        gens.append(g)
        orders.append(phi)
    return UnitGroup(d, tuple(gens), tuple(orders))


@lru_cache(maxsize=None)
def _discrete_logs(d: int) -> dict[int, tuple[int, ...]]:
    group = unit_group_structure(d)
    logs = {}
    for exps in itertools.product(*(range(o) for o in group.orders)):
        logs[group.element(exps)] = exps
    if d == 1:
        logs = {0: ()}
    return logs


@dataclass(frozen=True)
class Character:
    """A Dirichlet character mod ``modulus`` stored as its full value table.

    ``exponents`` is the label: generator ``g_i`` maps to
    ``zeta_m ** (exponents[i] * m / orders[i])`` where ``m`` is the exponent of
    the unit group.  ``index`` is the position in lexicographic enumeration.
    """

    modulus: int
    values: tuple[CycloRational, ...]
    order: int
    exponents: tuple[int, ...]
    index: int

    def __call__(self, l: int) -> CycloRational:
        return self.values[l % self.modulus]

    @property
    def key(self) -> tuple[int, tuple[int, ...]]:
        return (self.modulus, self.exponents)

    @property
    def label(self) -> str:
        return f"{self.modulus}.{self.index}"

    @property
    def field_order(self) -> int:
        return self.values[1 % self.modulus].order if self.modulus > 1 else 1

    def is_trivial(self) -> bool:
        return self.order == 1

    def to_json(self) -> dict:
        return {
            "modulus": self.modulus,
            "index": self.index,
            "label": self.label,
            "conductor": conductor(self),
            "order": self.order,
            "values": [v.to_json() for v in self.values],
        }

    def __repr__(self) -> str:
        return f"Character({self.label}, values=[{', '.join(map(str, self.values))}])"


@lru_cache(maxsize=None)
def _enumerate(d: int) -> tuple[Character, ...]:
    group = unit_group_structure(d)
    if d == 1:
        one = CycloRational.from_rational(1)
        return (Character(1, (one,), 1, (), 0),)
    m = group.exponent
    logs = _discrete_logs(d)
    zero = CycloRational.from_rational(0, m)
    zetas = [CycloRational.zeta(m, k) for k in range(m)]
    steps = [m // o for o in group.orders]
    chars = []
    for index, exps in enumerate(itertools.product(*(range(o) for o in group.orders))):
        values = []
        for l in range(d):
            log = logs.get(l)
            if log is None:
                values.append(zero)
            else:
                k = sum(e * s * a for e, s, a in zip(exps, steps, log)) % m
                values.append(zetas[k])
        order = math.lcm(*(o // math.gcd(e, o) for e, o in zip(exps, group.orders)))
        chars.append(Character(d, tuple(values), order, tuple(exps), index))
    return tuple(chars)


def enumerate_characters(d: int) -> list[Character]:
    """All phi(d) characters mod d, ordered lexicographically by exponent vector."""
    _check_modulus(d)
    return list(_enumerate(d))


def chi_eval(chi: Character, l: int) -> CycloRational:
    return chi.values[l % chi.modulus]


def _divisors(n: int) -> list[int]:
    return [k for k in range(1, n + 1) if n % k == 0]


def conductor(chi: Character) -> int:
    """Smallest f | d such that chi is constant on units in each class mod f."""
    d = chi.modulus
    units = [a for a in range(d) if math.gcd(a, d) == 1]
    for f in _divisors(d):
        seen: dict[int, CycloRational] = {}
        for a in units:
            v = chi.values[a]
            prev = seen.setdefault(a % f, v)
            if prev != v:
                break
        else:
            return f
    return d  # unreachable: f = d always qualifies


def primitive_characters(d: int) -> list[Character]:
    return [chi for chi in enumerate_characters(d) if conductor(chi) == d]


def select_characters(d: int, which: str = "all", index: Optional[int] = None) -> list[Character]:
    """Characters mod d filtered by ``which`` in {"all", "primitive", "index"}."""
    if which == "all":
        return enumerate_characters(d)
    if which == "primitive":
        return primitive_characters(d)
    if which == "index":
        chars = enumerate_characters(d)
        if index is None or not 0 <= index < len(chars):
            raise ValueError(f"character index {index!r} out of range for modulus {d} ({len(chars)} characters)")
        return [chars[index]]
    raise ValueError(f"unknown character filter {which!r}")


def induced_character(chi: Character, d: int) -> Character:
    """The character mod d (a multiple of chi's modulus) induced from chi."""
    if d % chi.modulus:
        raise ValueError(f"{d} is not a multiple of {chi.modulus}")
    for cand in enumerate_characters(d):
        if all(
            cand.values[a] == chi(a) for a in range(d) if math.gcd(a, d) == 1
        ):
            return cand
    raise LookupError(f"no character mod {d} induced from {chi.label}")
