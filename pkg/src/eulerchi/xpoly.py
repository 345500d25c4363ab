"""Polynomials in a formal variable x with cyclotomic-rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from .exact_arith import CycloRational

Coefficient = Union[CycloRational, int, Fraction]

__all__ = ["XPoly"]


class XPoly:
    """Immutable polynomial ``sum coeffs[i] * x**i``.

    Trailing zeros are trimmed, so the zero polynomial has no coefficients and
    equality is coefficientwise.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Coefficient] = ()):
        cs = [CycloRational.coerce(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs: tuple[CycloRational, ...] = tuple(cs)

    @classmethod
    def x(cls) -> XPoly:
        return cls([0, 1])

    @classmethod
    def constant(cls, c: Coefficient) -> XPoly:
        return cls([c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_coefficient(self) -> CycloRational:
        if not self.coeffs:
            return CycloRational.from_rational(0)
        return self.coeffs[-1]

    def coefficient(self, i: int) -> CycloRational:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return CycloRational.from_rational(0)

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.coeffs)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction, CycloRational)):
            other = XPoly([other])
        if not isinstance(other, XPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return XPoly([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __neg__(self) -> XPoly:
        return XPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, CycloRational, XPoly)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloRational)):
            return XPoly([c * other for c in self.coeffs])
        if not isinstance(other, XPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return XPoly()
        out: list = [None] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                term = a * b
                out[i + j] = term if out[i + j] is None else out[i + j] + term
        return XPoly(0 if c is None else c for c in out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> XPoly:
        result = XPoly([1])
        for _ in range(k):
            result = result * self
        return result

    def scale_argument(self, w: Coefficient) -> XPoly:
        """P(w*x)."""
        out = []
        power = CycloRational.from_rational(1)
        for c in self.coeffs:
            out.append(c * power)
            power = power * w
        return XPoly(out)

    def compose_affine(self, w: Coefficient, c: Coefficient) -> XPoly:
        """P(w*x + c), expanded by Horner's rule."""
        zero = CycloRational.from_rational(0)
        acc: list[CycloRational] = []
        for coeff in reversed(self.coeffs):
            nxt = [r * c for r in acc] + [zero]
            for i, r in enumerate(acc):
                nxt[i + 1] = nxt[i + 1] + r * w
            nxt[0] = nxt[0] + coeff
            acc = nxt
        return XPoly(acc)

    def __call__(self, value: Coefficient) -> CycloRational:
        acc = CycloRational.from_rational(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    evaluate = __call__

    # -- comparison / io ----------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, CycloRational)):
            other = XPoly([other])
        if not isinstance(other, XPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def to_json(self) -> list:
        return [c.to_json() for c in self.coeffs]

    @classmethod
    def from_json(cls, data: list) -> XPoly:
        return cls(CycloRational.from_json(c) for c in data)

    def __repr__(self) -> str:
        return f"XPoly({list(map(str, self.coeffs))})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            cs = str(c)
            if not mono:
                terms.append(cs)
            elif cs == "1":
                terms.append(mono)
            elif not c.is_rational() or " " in cs:
                terms.append(f"({cs})*{mono}")
            else:
                terms.append(f"{cs}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")
