"""Exact checkers for the fermionic-integral identities and the symmetric
identities of the generalized Euler polynomials.

Every check returns a :class:`VerificationReport` carrying both sides and
their full difference; ``passed`` is true exactly when that difference is
identically zero.

The integral of a polynomial over Z_p with respect to the fermionic measure is
``I(x^n) = E_n``.  For a character chi mod d the integral over X of
``chi(y) (x + y)^n`` is ``E_{n,chi}(x)``.

The symmetric object is

    T_chi(w1, w2) = (int int chi(x1) chi(x2) e^{(w1 x1 + w2 x2 + w1 w2 x) t})
                    / int e^{d w1 w2 x3 t} dx3

whose coefficients admit four expansions (``variant`` 15, 16, 17, 18 in
:func:`t_chi_expansion`).  All expansions here are normalized like the sums
in :func:`check_theorem1`, i.e. they equal ``2 * l! [t^l] T_chi(w1, w2)``.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable, Optional, Sequence, Union

from .dirichlet import Character, select_characters
from .euler_classical import euler_numbers
from .exact_arith import CycloRational, format_rational
from .gen_euler import (
    alternating_power_sum,
    check_fermionic_prime,
    fermionic_partial_sum,
    gen_euler_numbers,
    gen_euler_poly,
    gen_euler_series,
    poly_compose_affine,
)
from .powerseries import TruncatedEGF, binomial_row, egf_div, egf_exp, egf_mul, egf_scale_arg
from .xpoly import XPoly

__all__ = [
    "VerificationReport",
    "CongruenceReport",
    "IDENTITIES",
    "integral_of_poly",
    "check_recurrence",
    "check_eq13",
    "check_power_sum_series",
    "check_tchi_product_form",
    "t_chi_series",
    "t_chi_expansion",
    "t_chi_oracle",
    "check_theorem1",
    "check_theorem2",
    "check_tchi_coherence",
    "check_fermionic_sum",
    "check_fermionic_congruence",
    "random_rational_poly",
    "run_checks",
    "sweep",
]

Value = Union[XPoly, CycloRational, TruncatedEGF, tuple]

# identity families selectable from the command line
IDENTITIES = ("recurrence", "eq11", "eq13", "theorem1", "theorem2", "tchi-all", "fermionic")


def _difference(lhs: Value, rhs: Value) -> Value:
    if isinstance(lhs, tuple):
        return tuple(_difference(a, b) for a, b in zip(lhs, rhs))
    return lhs - rhs


def _is_zero(v: Value) -> bool:
    if isinstance(v, tuple):
        return all(_is_zero(x) for x in v)
    if isinstance(v, TruncatedEGF):
        return all(c.is_zero() for c in v.coeffs)
    return v.is_zero()


def _to_json(v: Value) -> Any:
    if isinstance(v, tuple):
        return [_to_json(x) for x in v]
    return v.to_json()


@dataclass(frozen=True)
class VerificationReport:
    identity_id: str
    parameters: dict
    lhs: Value
    rhs: Value
    discrepancy: Value = field(init=False)
    passed: bool = field(init=False)
    note: str = ""

    def __post_init__(self):
        diff = _difference(self.lhs, self.rhs)
        object.__setattr__(self, "discrepancy", diff)
        object.__setattr__(self, "passed", _is_zero(diff))

    def sort_key(self) -> tuple:
        return (self.identity_id, tuple(self.parameters.values()))

    def to_json(self) -> dict:
        out = {
            "identity": self.identity_id,
            "parameters": self.parameters,
            "passed": self.passed,
            "lhs": _to_json(self.lhs),
            "rhs": _to_json(self.rhs),
            "discrepancy": _to_json(self.discrepancy),
        }
        if self.note:
            out["note"] = self.note
        return out


@dataclass(frozen=True)
class CongruenceReport:
    """S_N - E_{k,chi} must have p-adic valuation at least N."""

    identity_id: str
    parameters: dict
    partial_sum: CycloRational
    limit: CycloRational
    valuation: Union[int, float]
    required: int

    @property
    def passed(self) -> bool:
        return self.valuation >= self.required

    @property
    def discrepancy(self) -> CycloRational:
        return self.partial_sum - self.limit

    def sort_key(self) -> tuple:
        return (self.identity_id, tuple(self.parameters.values()))

    def to_json(self) -> dict:
        return {
            "identity": self.identity_id,
            "parameters": self.parameters,
            "passed": self.passed,
            "partial_sum": self.partial_sum.to_json(),
            "limit": self.limit.to_json(),
            "difference": self.discrepancy.to_json(),
            "valuation": None if math.isinf(self.valuation) else self.valuation,
            "required": self.required,
        }


def _check_odd(**values: int) -> None:
    for name, v in values.items():
        if v < 1 or v % 2 == 0:
            raise ValueError(f"{name} must be an odd positive integer, got {v}")


def _char_params(chi: Character) -> dict:
    return {"d": chi.modulus, "chi": chi.index}


# ---------------------------------------------------------------------------
# integrals over Z_p and the shift recurrences


def integral_of_poly(f: XPoly) -> Fraction:
    """Fermionic integral of a rational polynomial: sum_k f_k E_k."""
    if not f.is_rational():
        raise ValueError("integral_of_poly needs rational coefficients")
    E = euler_numbers(max(f.degree, 0))
    return sum((c.to_rational() * E[k] for k, c in enumerate(f.coeffs)), Fraction(0))


def check_recurrence(f: XPoly, n: int, sample: Optional[int] = None) -> VerificationReport:
    """I(f_n) + (-1)^(n-1) I(f) = 2 sum_{l<n} (-1)^(n-1-l) f(l), f_n(x) = f(x + n).

    n = 1 is the basic shift identity; odd n gives ``I(f_n) + I(f)`` against
    ``2 sum (-1)^l f(l)``; even n is read with q = 1 as ``I(f_n) - I(f)``
    against ``2 sum (-1)^(l-1) f(l)``.  Each specialization is computed in its
    own form.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    shifted = integral_of_poly(poly_compose_affine(f, 1, n))
    base = integral_of_poly(f)
    values = [f(l).to_rational() for l in range(n)]
    if n == 1:
        note = "shift-by-one"
        lhs = shifted + base
        rhs = 2 * values[0]
    elif n % 2:
        note = "odd shift"
        lhs = shifted + base
        rhs = 2 * sum((v if l % 2 == 0 else -v for l, v in enumerate(values)), Fraction(0))
    else:
        note = "even shift, q = 1"
        lhs = shifted - base
        rhs = 2 * sum((-v if l % 2 == 0 else v for l, v in enumerate(values)), Fraction(0))
    return VerificationReport(
        "recurrence",
        {"sample": -1 if sample is None else sample, "n": n, "degree": f.degree},
        CycloRational.from_rational(lhs),
        CycloRational.from_rational(rhs),
        note=note,
    )


# ---------------------------------------------------------------------------
# finite identities for E_{k,chi}


def check_eq13(chi: Character, k: int, n: int) -> VerificationReport:
    """E_{k,chi}(nd) + E_{k,chi} = T_{k,chi}(nd - 1) for odd n.

    The printed subscript ``k,x`` on the first term is read as ``k,chi``.
    """
    _check_odd(n=n)
    d = chi.modulus
    lhs = gen_euler_poly(chi, k)(n * d) + gen_euler_numbers(chi, k).numbers[k]
    rhs = alternating_power_sum(chi, k, n * d - 1)
    return VerificationReport(
        "eq13", {**_char_params(chi), "k": k, "n": n}, lhs, rhs,
        note="subscript k,x read as k,chi",
    )


def check_power_sum_series(chi: Character, n: int, L: int, route: str = "sum") -> VerificationReport:
    """The series sum_k T_{k,chi}(nd - 1) t^k / k! against the integral side.

    ``route="sum"`` uses ``int chi(x) e^{(nd+x)t} + int chi(x) e^{xt}``;
    ``route="quotient"`` uses ``2 int chi(x) e^{xt} / int e^{ndxt}``.
    """
    _check_odd(n=n)
    d = chi.modulus
    G = gen_euler_series(chi, L)
    if route == "sum":
        lhs = egf_mul(G, egf_exp(n * d, L) + 1)
    elif route == "quotient":
        plain = egf_div(TruncatedEGF.constant(2, L), egf_exp(n * d, L) + 1)
        lhs = egf_div(G * 2, plain)
    else:
        raise ValueError(f"unknown route {route!r}")
    rhs = TruncatedEGF(alternating_power_sum(chi, k, n * d - 1) for k in range(L + 1))
    return VerificationReport("eq11", {**_char_params(chi), "n": n, "L": L, "route": route}, lhs, rhs)


# ---------------------------------------------------------------------------
# the symmetric function T_chi(w1, w2)


def _alternating_character_series(chi: Character, L: int) -> TruncatedEGF:
    # sum_{a<d} chi(a) (-1)^a e^{at}
    out = TruncatedEGF.constant(0, L)
    for a in range(chi.modulus):
        v = chi.values[a]
        if not v.is_zero():
            out = out + egf_exp(a, L) * (v if a % 2 == 0 else -v)
    return out


def t_chi_series(chi: Character, w1: int, w2: int, L: int, denominator: str = "symmetric") -> TruncatedEGF:
    """x-free part of T_chi(w1, w2) as a quotient of fermionic integrals.

    The double integral factors into two single integrals, each taken from the
    defining series of E_{n,chi}.  ``denominator="symmetric"`` divides by
    ``int e^{d w1 w2 x t} dx``; ``denominator="w1-only"`` follows the variant
    printed without w2, ``int e^{d w1 x t} dx``, kept to show it is not
    symmetric.
    """
    d = chi.modulus
    G = gen_euler_series(chi, L)
    numerator = egf_mul(egf_scale_arg(G, w1), egf_scale_arg(G, w2))
    if denominator == "symmetric":
        scale = d * w1 * w2
    elif denominator == "w1-only":
        scale = d * w1
    else:
        raise ValueError(f"unknown denominator reading {denominator!r}")
    plain = egf_div(TruncatedEGF.constant(2, L), egf_exp(scale, L) + 1)
    return egf_div(numerator, plain)


def check_tchi_product_form(chi: Character, w1: int, w2: int, L: int) -> VerificationReport:
    """Quotient of integrals against the closed product form

        2 (e^{d w1 w2 t} + 1) / ((e^{w1 d t} + 1)(e^{w2 d t} + 1))
          * sum_a chi(a) e^{w1 a t} (-1)^a * sum_b chi(b) e^{w2 b t} (-1)^b.
    """
    _check_odd(w1=w1, w2=w2)
    d = chi.modulus
    A = _alternating_character_series(chi, L)
    top = egf_mul(
        (egf_exp(d * w1 * w2, L) + 1) * 2,
        egf_mul(egf_scale_arg(A, w1), egf_scale_arg(A, w2)),
    )
    bottom = egf_mul(egf_exp(w1 * d, L) + 1, egf_exp(w2 * d, L) + 1)
    rhs = egf_div(top, bottom)
    lhs = t_chi_series(chi, w1, w2, L)
    return VerificationReport("tchi-product-form", {**_char_params(chi), "w1": w1, "w2": w2, "L": L}, lhs, rhs)


def _theorem1_side(chi: Character, w_a: int, w_b: int, l: int, include_x: bool) -> Union[XPoly, CycloRational]:
    # sum_i C(l,i) E_{i,chi}(w_b x) T_{l-i,chi}(d w_a - 1) w_a^i w_b^(l-i)
    d = chi.modulus
    row = binomial_row(l)
    if include_x:
        acc: Union[XPoly, CycloRational] = XPoly()
    else:
        acc = CycloRational.from_rational(0)
        E = gen_euler_numbers(chi, l).numbers
    for i in range(l + 1):
        weight = alternating_power_sum(chi, l - i, d * w_a - 1) * (row[i] * w_a**i * w_b ** (l - i))
        if weight.is_zero():
            continue
        if include_x:
            acc = acc + gen_euler_poly(chi, i).scale_argument(w_b) * weight
        else:
            acc = acc + E[i] * weight
    return acc


def _shifted_sum(chi: Character, w_a: int, w_b: int, n: int, weighted: bool = True) -> XPoly:
    # w_a^n sum_{j < d w_a} (-1)^j chi(j) E_{n,chi}(w_b x + (w_b / w_a) j)
    P = gen_euler_poly(chi, n)
    acc = XPoly()
    for j in range(chi.modulus * w_a):
        sign = 1 if j % 2 == 0 else -1
        if weighted:
            v = chi(j)
            if v.is_zero():
                continue
            coeff = v * sign
        else:
            coeff = sign
        acc = acc + poly_compose_affine(P, w_b, Fraction(w_b * j, w_a)) * coeff
    return acc * w_a**n


def t_chi_expansion(chi: Character, w1: int, w2: int, variant: int, L: int) -> tuple[XPoly, ...]:
    """Coefficients l = 0..L of the expansion of T_chi(w1, w2), as polynomials in x.

    variant 15: sum_i C(l,i) E_{i,chi}(w2 x) T_{l-i,chi}(d w1 - 1) w1^i w2^(l-i)
    variant 16: the same with w1 and w2 exchanged
    variant 17: 2 w1^l sum_{j < d w1} (-1)^j chi(j) E_{l,chi}(w2 x + (w2/w1) j)
    variant 18: the same with w1 and w2 exchanged
    """
    _check_odd(w1=w1, w2=w2)
    if variant == 15:
        return tuple(_theorem1_side(chi, w1, w2, l, True) for l in range(L + 1))
    if variant == 16:
        return tuple(_theorem1_side(chi, w2, w1, l, True) for l in range(L + 1))
    if variant == 17:
        return tuple(_shifted_sum(chi, w1, w2, l) * 2 for l in range(L + 1))
    if variant == 18:
        return tuple(_shifted_sum(chi, w2, w1, l) * 2 for l in range(L + 1))
    raise ValueError(f"unknown expansion variant {variant!r}")


def t_chi_oracle(chi: Character, w1: int, w2: int, L: int) -> tuple[XPoly, ...]:
    """The same coefficients from the series quotient times e^{w1 w2 x t}."""
    Q = t_chi_series(chi, w1, w2, L)
    w = w1 * w2
    out = []
    for l in range(L + 1):
        row = binomial_row(l)
        coeffs = [Q[l - j] * (2 * row[j] * w**j) for j in range(l + 1)]
        out.append(XPoly(coeffs))
    return tuple(out)


def check_theorem1(chi: Character, w1: int, w2: int, l: int, include_x: bool = True) -> VerificationReport:
    """Symmetry of sum_i C(l,i) E_{i,chi}(w2 x) T_{l-i,chi}(d w1 - 1) w1^i w2^(l-i).

    ``include_x=False`` is the x = 0 case, computed from the numbers directly.
    """
    _check_odd(w1=w1, w2=w2, d=chi.modulus)
    lhs = _theorem1_side(chi, w1, w2, l, include_x)
    rhs = _theorem1_side(chi, w2, w1, l, include_x)
    params = {**_char_params(chi), "w1": w1, "w2": w2, "l": l, "x": "poly" if include_x else "0"}
    return VerificationReport("theorem1", params, lhs, rhs)


def check_theorem2(chi: Character, w1: int, w2: int, n: int, weighted: bool = True) -> VerificationReport:
    """w1^n sum_{l<d w1} (-1)^l chi(l) E_{n,chi}(w2 x + (w2/w1) l) is symmetric.

    The statement is printed without the factor chi(l); that form only holds
    for d = 1 and is available with ``weighted=False``.
    """
    _check_odd(w1=w1, w2=w2)
    lhs = _shifted_sum(chi, w1, w2, n, weighted)
    rhs = _shifted_sum(chi, w2, w1, n, weighted)
    params = {**_char_params(chi), "w1": w1, "w2": w2, "n": n, "form": "weighted" if weighted else "printed"}
    note = "" if weighted else "printed form, without chi(l)"
    return VerificationReport("theorem2", params, lhs, rhs, note=note)


def check_tchi_coherence(chi: Character, w1: int, w2: int, L: int) -> list[VerificationReport]:
    """Variant 15 against variants 16, 17, 18 and the series oracle."""
    base = t_chi_expansion(chi, w1, w2, 15, L)
    others = [(str(v), t_chi_expansion(chi, w1, w2, v, L)) for v in (16, 17, 18)]
    others.append(("series", t_chi_oracle(chi, w1, w2, L)))
    return [
        VerificationReport(
            "tchi-coherence",
            {**_char_params(chi), "w1": w1, "w2": w2, "L": L, "against": name},
            base,
            other,
        )
        for name, other in others
    ]


# ---------------------------------------------------------------------------
# truncated fermionic sums


def check_fermionic_sum(chi: Character, k: int, p: int, N: int) -> VerificationReport:
    """2 S_N = E_{k,chi}(d p^N) + E_{k,chi} exactly (at x = 0)."""
    d = chi.modulus
    S = fermionic_partial_sum(chi, k, p, N)
    rhs = gen_euler_poly(chi, k)(d * p**N) + gen_euler_numbers(chi, k).numbers[k]
    return VerificationReport("fermionic-sum", {**_char_params(chi), "k": k, "p": p, "N": N}, S * 2, rhs)


def check_fermionic_congruence(
    chi: Character, k: int, p: int, N: int, x: Union[int, Fraction] = 0
) -> CongruenceReport:
    """S_N = E_{k,chi}(x) mod p^N, coefficientwise in the power basis.

    Guaranteed only for p-integral x; other shifts are reported as computed.
    """
    S = fermionic_partial_sum(chi, k, p, N, x)
    limit = gen_euler_poly(chi, k)(Fraction(x))
    params = {**_char_params(chi), "k": k, "p": p, "N": N, "x": format_rational(x)}
    return CongruenceReport("fermionic-congruence", params, S, limit, (S - limit).padic_valuation(p), N)


# ---------------------------------------------------------------------------
# sweeps


def random_rational_poly(rng: random.Random, max_degree: int = 8, bound: int = 100) -> XPoly:
    degree = rng.randint(0, max_degree)
    return XPoly(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(degree + 1))


def _call(task: tuple[Callable, tuple, dict]):
    func, args, kwargs = task
    out = func(*args, **kwargs)
    return out if isinstance(out, list) else [out]


def run_checks(tasks: Sequence[tuple[Callable, tuple, dict]], jobs: int = 1) -> list:
    """Run check tasks, optionally in worker processes; output is parameter-sorted."""
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_call, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        chunks = [_call(t) for t in tasks]
    reports = [r for chunk in chunks for r in chunk]
    reports.sort(key=lambda r: r.sort_key())
    return reports


def _characters(moduli: Iterable[int], chars: str, char_index: Optional[int]) -> list[Character]:
    out = []
    for d in moduli:
        out.extend(select_characters(d, chars, char_index))
    return out


def sweep(
    identity: str,
    moduli: Sequence[int] = (1, 3, 5, 7, 9),
    chars: str = "all",
    char_index: Optional[int] = None,
    w1s: Sequence[int] = (1, 3, 5),
    w2s: Sequence[int] = (1, 3, 5),
    max_l: int = 12,
    max_n: int = 10,
    max_k: int = 10,
    n_values: Sequence[int] = (1, 3, 5),
    L: int = 8,
    primes: Sequence[int] = (3, 5, 7),
    max_N: int = 4,
    samples: int = 50,
    max_shift: int = 6,
    seed: int = 0,
    include_x: bool = True,
    weighted: bool = True,
    jobs: int = 1,
) -> list:
    """Build and run the grid of checks for one identity family."""
    tasks: list[tuple[Callable, tuple, dict]] = []
    if identity == "recurrence":
        rng = random.Random(seed)
        polys = [random_rational_poly(rng) for _ in range(samples)]
        tasks = [
            (check_recurrence, (f, n), {"sample": i})
            for i, f in enumerate(polys)
            for n in range(1, max_shift + 1)
        ]
        return run_checks(tasks, jobs)
    characters = _characters(moduli, chars, char_index)
    for chi in characters:
        if identity == "eq13":
            tasks += [(check_eq13, (chi, k, n), {}) for k in range(max_k + 1) for n in n_values]
        elif identity == "eq11":
            tasks += [
                (check_power_sum_series, (chi, n, max_k), {"route": route})
                for n in n_values
                for route in ("sum", "quotient")
            ]
        elif identity == "theorem1":
            tasks += [
                (check_theorem1, (chi, w1, w2, l), {"include_x": include_x})
                for w1 in w1s
                for w2 in w2s
                for l in range(max_l + 1)
            ]
        elif identity == "theorem2":
            tasks += [
                (check_theorem2, (chi, w1, w2, n), {"weighted": weighted})
                for w1 in w1s
                for w2 in w2s
                for n in range(max_n + 1)
            ]
        elif identity == "tchi-all":
            for w1 in w1s:
                for w2 in w2s:
                    tasks.append((check_tchi_coherence, (chi, w1, w2, L), {}))
                    tasks.append((check_tchi_product_form, (chi, w1, w2, L), {}))
        elif identity == "fermionic":
            for p in primes:
                if chi.modulus % p == 0:
                    continue
                check_fermionic_prime(p, chi.modulus)
                for k in range(max_k + 1):
                    for N in range(1, max_N + 1):
                        tasks.append((check_fermionic_sum, (chi, k, p, N), {}))
                        tasks.append((check_fermionic_congruence, (chi, k, p, N), {}))
        else:
            raise ValueError(f"unknown identity {identity!r}")
    return run_checks(tasks, jobs)
