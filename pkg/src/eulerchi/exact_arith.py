"""Exact rational and cyclotomic-field arithmetic.

Rationals are :class:`fractions.Fraction`.  Elements of ``Q(zeta_m)`` are
:class:`CycloRational` values stored in the power basis ``1, zeta, ...,
zeta^(phi(m)-1)`` with a single common denominator, fully reduced modulo the
m-th cyclotomic polynomial.  Values of different orders are lifted to the lcm
order before they are combined, so equality is always a structural check.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction]

__all__ = [
    "Rational",
    "CycloRational",
    "cyclotomic_polynomial",
    "cyclo_arith",
    "padic_valuation",
    "rational_valuation",
    "factorize",
    "euler_phi",
    "mobius",
    "is_prime",
    "format_rational",
    "parse_rational",
]


# ---------------------------------------------------------------------------
# elementary number theory


def factorize(n: int) -> dict[int, int]:
    """Prime factorisation by trial division, ``{p: e}`` in increasing p."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


def euler_phi(n: int) -> int:
    result = n
    for p in factorize(n):
        result -= result // p
    return result


def mobius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def rational_valuation(x: Scalar, p: int) -> Union[int, float]:
    """v_p of a rational; ``math.inf`` for zero."""
    x = Fraction(x)
    if x == 0:
        return math.inf
    return _int_valuation(x.numerator, p) - _int_valuation(x.denominator, p)


def _int_valuation(n: int, p: int) -> int:
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def format_rational(x: Scalar) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


# ---------------------------------------------------------------------------
# integer polynomials, coefficient lists low -> high


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divexact(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Quotient of a by the monic polynomial b; raises if the division is inexact."""
    rem = list(a)
    db = len(b) - 1
    if b[-1] != 1:
        raise ValueError("divisor must be monic")
    quot = [0] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c:
            quot[i - db] = c
            for j in range(db + 1):
                rem[i - db + j] -= c * b[j]
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the m-th cyclotomic polynomial.

    Computed by exact division of ``x^m - 1`` by the product of ``Phi_d`` over
    proper divisors ``d`` of ``m``.
    """
    if m < 1:
        raise ValueError(f"cyclotomic order must be positive, got {m}")
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num = _poly_divexact(num, cyclotomic_polynomial(d))
    return tuple(num)


def _reduce(nums: list[int], m: int) -> list[int]:
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    for i in range(len(nums) - 1, deg - 1, -1):
        c = nums[i]
        if c:
            base = i - deg
            for j in range(deg):
                if phi[j]:
                    nums[base + j] -= c * phi[j]
    if len(nums) < deg:
        nums.extend([0] * (deg - len(nums)))
    return nums[:deg]


@lru_cache(maxsize=None)
def _lift_images(m: int, big: int) -> tuple[tuple[int, ...], ...]:
    """Power-basis vectors of zeta_big^(i*big/m) for i < phi(m)."""
    step = big // m
    out = []
    for i in range(euler_phi(m)):
        v = [0] * (i * step + 1)
        v[-1] = 1
        out.append(tuple(_reduce(v, big)))
    return tuple(out)


@lru_cache(maxsize=None)
def _trace_weights(m: int) -> tuple[Fraction, ...]:
    # Tr(zeta_m^i) / phi(m) = mu(m/g) / phi(m/g) with g = gcd(m, i)
    out = []
    for i in range(euler_phi(m)):
        q = m // math.gcd(m, i)
        out.append(Fraction(mobius(q), euler_phi(q)))
    return tuple(out)


# ---------------------------------------------------------------------------
# Q[x] helpers used only for inversion


def _qtrim(a: list[Fraction]) -> list[Fraction]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _qdivmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    rem = list(a)
    db = len(b) - 1
    lead = b[-1]
    quot = [Fraction(0)] * max(len(rem) - db, 1)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i] / lead
        if c:
            quot[i - db] = c
            for j in range(db + 1):
                rem[i - db + j] -= c * b[j]
    return _qtrim(quot), _qtrim(rem[:db] if db else [])


def _qsub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _qtrim([Fraction(c) for c in out])


def _qmul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _qtrim(out)


# ---------------------------------------------------------------------------


class CycloRational:
    """An element of the cyclotomic field Q(zeta_order).

    ``CycloRational(m, coeffs)`` accepts any representative (ints, Fractions or
    rational strings, low degree first) and reduces it modulo Phi_m.
    """

    __slots__ = ("order", "_nums", "_den")

    def __init__(self, order: int, coeffs: Iterable[Union[Scalar, str]] = ()):
        if order < 1:
            raise ValueError(f"cyclotomic order must be positive, got {order}")
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = den * c.denominator // math.gcd(den, c.denominator)
        nums = [c.numerator * (den // c.denominator) for c in fr]
        self._init(order, _reduce(nums, order), den)

    def _init(self, order: int, nums: list[int], den: int) -> None:
        g = den
        for n in nums:
            if g == 1:
                break
            g = math.gcd(g, n)
        if g != 1:
            nums = [n // g for n in nums]
            den //= g
        self.order = order
        self._nums = tuple(nums)
        self._den = den

    @classmethod
    def _raw(cls, order: int, nums: list[int], den: int) -> CycloRational:
        obj = cls.__new__(cls)
        obj._init(order, nums, den)
        return obj

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_rational(cls, x: Scalar, order: int = 1) -> CycloRational:
        x = Fraction(x)
        nums = [0] * euler_phi(order)
        nums[0] = x.numerator
        return cls._raw(order, nums, x.denominator)

    @classmethod
    def zeta(cls, order: int, k: int = 1) -> CycloRational:
        """zeta_order ** k."""
        k %= order
        nums = [0] * (k + 1)
        nums[k] = 1
        return cls._raw(order, _reduce(nums, order), 1)

    @classmethod
    def coerce(cls, x: Union[CycloRational, Scalar]) -> CycloRational:
        if isinstance(x, CycloRational):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.from_rational(x)
        raise TypeError(f"cannot convert {type(x).__name__} to CycloRational")

    # -- accessors ----------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(n, self._den) for n in self._nums)

    @property
    def denominator(self) -> int:
        return self._den

    def is_zero(self) -> bool:
        return not any(self._nums)

    def is_rational(self) -> bool:
        return not any(self._nums[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._nums[0], self._den)

    def lift(self, order: int) -> CycloRational:
        """The same element viewed in Q(zeta_order); order must be a multiple."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"cannot lift order {self.order} to {order}")
        return CycloRational._raw(order, self._lifted_nums(order), self._den)

    def _lifted_nums(self, order: int) -> list[int]:
        if order == self.order:
            return list(self._nums)
        out = [0] * euler_phi(order)
        for n, image in zip(self._nums, _lift_images(self.order, order)):
            if n:
                for j, v in enumerate(image):
                    if v:
                        out[j] += n * v
        return out

    def _aligned(self, other: CycloRational) -> tuple[int, list[int], list[int]]:
        if self.order == other.order:
            return self.order, list(self._nums), list(other._nums)
        big = math.lcm(self.order, other.order)
        return big, self._lifted_nums(big), other._lifted_nums(big)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            nums = [n * other.denominator for n in self._nums]
            nums[0] += other.numerator * self._den
            return CycloRational._raw(self.order, nums, self._den * other.denominator)
        if not isinstance(other, CycloRational):
            return NotImplemented
        m, a, b = self._aligned(other)
        if self._den == other._den:
            return CycloRational._raw(m, [x + y for x, y in zip(a, b)], self._den)
        da, db = self._den, other._den
        return CycloRational._raw(m, [x * db + y * da for x, y in zip(a, b)], da * db)

    __radd__ = __add__

    def __neg__(self) -> CycloRational:
        return CycloRational._raw(self.order, [-n for n in self._nums], self._den)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, CycloRational)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return (-self) + other
        return NotImplemented

    def _scale(self, x: Fraction) -> CycloRational:
        return CycloRational._raw(
            self.order, [n * x.numerator for n in self._nums], self._den * x.denominator
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scale(Fraction(other))
        if not isinstance(other, CycloRational):
            return NotImplemented
        if other.order == 1:
            return self._scale(Fraction(other._nums[0], other._den))
        if self.order == 1:
            return other._scale(Fraction(self._nums[0], self._den))
        m, a, b = self._aligned(other)
        return CycloRational._raw(m, _reduce(_poly_mul(a, b), m), self._den * other._den)

    __rmul__ = __mul__

    def inverse(self) -> CycloRational:
        """Multiplicative inverse via the extended Euclidean algorithm mod Phi_m."""
        if self.is_zero():
            raise ZeroDivisionError("division by zero in Q(zeta)")
        if self.is_rational():
            return CycloRational.from_rational(1 / self.to_rational(), self.order)
        modulus = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        r0, r1 = modulus, _qtrim(list(self.coeffs))
        s0: list[Fraction] = []
        s1: list[Fraction] = [Fraction(1)]
        while r1:
            q, r = _qdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _qsub(s0, _qmul(q, s1))
        # r0 is a nonzero constant since Phi_m is irreducible
        c = r0[0]
        return CycloRational(self.order, [s / c for s in s0])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in Q(zeta)")
            return self._scale(1 / Fraction(other))
        if not isinstance(other, CycloRational):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, k: int) -> CycloRational:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = CycloRational.from_rational(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self._nums[0], self._den) == other
        if not isinstance(other, CycloRational):
            return NotImplemented
        if self._den != other._den:
            return False
        _, a, b = self._aligned(other)
        return a == b

    def __hash__(self) -> int:
        # normalised trace is invariant under lifting, so equal values hash alike
        if self.is_rational():
            return hash(Fraction(self._nums[0], self._den))
        w = _trace_weights(self.order)
        return hash(sum((n * x for n, x in zip(self._nums, w)), Fraction(0)) / self._den)

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- misc ---------------------------------------------------------------

    def padic_valuation(self, p: int) -> Union[int, float]:
        if self.is_zero():
            return math.inf
        return min(_int_valuation(n, p) for n in self._nums if n) - _int_valuation(self._den, p)

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [format_rational(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> CycloRational:
        return cls(int(data["order"]), [parse_rational(str(c)) for c in data["coeffs"]])

    def __repr__(self) -> str:
        return f"CycloRational({self.order}, {[format_rational(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if self.is_rational():
            return format_rational(self.to_rational())
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else (f"z{self.order}" if i == 1 else f"z{self.order}^{i}")
            if not mono:
                terms.append(format_rational(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{format_rational(c)}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")


def cyclo_arith(a: CycloRational, b: CycloRational, op: str) -> CycloRational:
    """Apply ``op`` in {"add", "sub", "mul", "div"}; division by zero raises."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def padic_valuation(a: Union[CycloRational, Scalar], p: int) -> Union[int, float]:
    """Minimum p-adic valuation over the power-basis coefficients of ``a``.

    Returns ``math.inf`` exactly when ``a`` is zero.
    """
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if isinstance(a, CycloRational):
        return a.padic_valuation(p)
    return rational_valuation(a, p)
