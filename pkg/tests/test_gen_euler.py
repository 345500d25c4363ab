from fractions import Fraction

import pytest
import sympy

from eulerchi.dirichlet import enumerate_characters
from eulerchi.euler_classical import euler_numbers, euler_polynomial
from eulerchi.exact_arith import CycloRational, padic_valuation
from eulerchi.gen_euler import (
    alternating_power_sum,
    fermionic_partial_sum,
    gen_euler_gf_oracle,
    gen_euler_numbers,
    gen_euler_poly,
    gen_euler_series,
    poly_compose_affine,
)
from eulerchi.powerseries import egf_exp, egf_mul
from eulerchi.xpoly import XPoly

GRID = (1, 3, 5, 7, 9)


def chars(*moduli):
    return [chi for d in moduli for chi in enumerate_characters(d)]


QUAD3 = enumerate_characters(3)[1]


def brute_partial_sum(chi, k, p, N, x=0):
    x = Fraction(x)
    acc = CycloRational(1)
    for y in range(chi.modulus * p**N):
        acc = acc + chi(y) * ((x + y) ** k * (-1) ** y)
    return acc


def test_modulus_one_is_classical():
    (chi,) = enumerate_characters(1)
    assert list(gen_euler_numbers(chi, 12).numbers) == euler_numbers(12)
    assert gen_euler_gf_oracle(chi, 12) == euler_numbers(12)
    for n in range(9):
        assert gen_euler_poly(chi, n) == euler_polynomial(n)


def test_quadratic_mod_3_small_values():
    table = gen_euler_numbers(QUAD3, 3)
    assert table[0] == -2
    assert gen_euler_gf_oracle(QUAD3, 0)[0] == -2
    assert table[1] == gen_euler_gf_oracle(QUAD3, 1)[1]
    assert gen_euler_poly(QUAD3, 1) == XPoly([table[1], -2])


@pytest.mark.parametrize("chi", chars(*GRID), ids=lambda c: c.label)
def test_two_routes_agree(chi):
    assert list(gen_euler_numbers(chi, 12).numbers) == gen_euler_gf_oracle(chi, 12)


@pytest.mark.parametrize("d,index", [(3, 1), (5, 2), (7, 3), (9, 3)])
def test_real_characters_against_sympy_series(d, index):
    chi = enumerate_characters(d)[index]
    t = sympy.Symbol("t")
    vals = [chi(l).to_rational() for l in range(d)]
    gf = 2 * sum(int((-1) ** l * v) * sympy.exp(l * t) for l, v in enumerate(vals)) / (sympy.exp(d * t) + 1)
    n_max = 8
    ser = sympy.series(gf, t, 0, n_max + 1).removeO()
    expected = [sympy.Rational(ser.coeff(t, n)) * sympy.factorial(n) for n in range(n_max + 1)]
    got = gen_euler_numbers(chi, n_max).numbers
    assert [g.to_rational() for g in got] == [Fraction(int(e.p), int(e.q)) for e in expected]


@pytest.mark.parametrize("chi", chars(*GRID), ids=lambda c: c.label)
def test_denominators_are_powers_of_two(chi):
    for v in gen_euler_numbers(chi, 12).numbers:
        den = v.denominator
        assert den & (den - 1) == 0
        for p in (3, 5, 7, 11, 13):
            assert padic_valuation(v, p) >= 0


@pytest.mark.parametrize("chi", chars(3, 5, 7), ids=lambda c: c.label)
def test_polynomial_shape(chi):
    E = gen_euler_numbers(chi, 8).numbers
    for n in range(9):
        P = gen_euler_poly(chi, n)
        assert P(0) == E[n]
        if not E[0].is_zero():
            assert P.degree == n and P.leading_coefficient() == E[0]


@pytest.mark.parametrize("chi", chars(1, 3, 5), ids=lambda c: c.label)
def test_shift_identity(chi):
    # E_{n,chi}(x + z) = sum_i C(n,i) E_{i,chi}(x) z^{n-i}; degree n in z, so
    # n + 1 sample points of z decide it as a two-variable identity
    import math

    for n in range(9):
        P = gen_euler_poly(chi, n)
        for z in range(n + 1):
            rhs = sum(
                (gen_euler_poly(chi, i) * (math.comb(n, i) * z ** (n - i)) for i in range(n + 1)),
                XPoly(),
            )
            assert poly_compose_affine(P, 1, z) == rhs


@pytest.mark.parametrize("chi", chars(1, 3, 5), ids=lambda c: c.label)
@pytest.mark.parametrize("x", [Fraction(0), Fraction(2, 3), Fraction(-7, 5)])
def test_series_times_exponential(chi, x):
    L = 10
    series = egf_mul(gen_euler_series(chi, L), egf_exp(x, L))
    assert list(series.coeffs) == [gen_euler_poly(chi, n)(x) for n in range(L + 1)]


def test_compose_affine_examples():
    P = XPoly([0, 0, 1])
    assert poly_compose_affine(P, 1, 0) == P
    assert poly_compose_affine(P, 2, 1) == XPoly([1, 4, 4])
    E2 = euler_polynomial(2)
    assert poly_compose_affine(E2, 1, 1) + E2 == XPoly([0, 0, 2])
    assert poly_compose_affine(XPoly([1, 1]), 3, CycloRational.zeta(3)) == XPoly([1 + CycloRational.zeta(3), 3])


def test_alternating_power_sum_examples():
    assert alternating_power_sum(QUAD3, 0, 2) == -4
    for chi in chars(3, 5):
        for k in range(1, 5):
            assert alternating_power_sum(chi, k, 0) == 0
    (triv,) = enumerate_characters(1)
    assert alternating_power_sum(triv, 1, 1) == -2
    assert alternating_power_sum(triv, 0, 0) == 2  # 0^0 = 1


def test_fermionic_examples():
    (triv,) = enumerate_characters(1)
    for p in (3, 5, 7):
        for N in (1, 2, 3):
            assert fermionic_partial_sum(triv, 0, p, N) == 1
    s = fermionic_partial_sum(QUAD3, 0, 5, 1)
    assert s == alternating_power_sum(QUAD3, 0, 14) / 2 == -2


@pytest.mark.parametrize("chi", chars(1, 5, 7), ids=lambda c: c.label)
@pytest.mark.parametrize("x", [0, Fraction(3, 4)])
def test_fermionic_grouping_matches_literal_sum(chi, x):
    for p in (3,) if chi.modulus != 3 else (5,):
        for N in (1, 2):
            for k in (0, 1, 4):
                assert fermionic_partial_sum(chi, k, p, N, x) == brute_partial_sum(chi, k, p, N, x)


@pytest.mark.parametrize("chi", chars(1, 5, 7), ids=lambda c: c.label)
def test_fermionic_congruence_small(chi):
    for p in (3, 7) if chi.modulus != 7 else (3, 5):
        if chi.modulus % p == 0:
            continue
        for k in range(6):
            E = gen_euler_numbers(chi, k).numbers[k]
            for N in (1, 2, 3):
                S = fermionic_partial_sum(chi, k, p, N)
                assert padic_valuation(S - E, p) >= N
                assert 2 * S == gen_euler_poly(chi, k)(chi.modulus * p**N) + E


def test_fermionic_rejects_bad_primes():
    chi = enumerate_characters(5)[1]
    with pytest.raises(ValueError):
        fermionic_partial_sum(chi, 2, 5, 1)
    with pytest.raises(ValueError):
        fermionic_partial_sum(chi, 2, 2, 1)
    with pytest.raises(ValueError):
        fermionic_partial_sum(chi, 2, 9, 1)
