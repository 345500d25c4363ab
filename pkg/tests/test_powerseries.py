from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eulerchi.exact_arith import CycloRational
from eulerchi.powerseries import (
    TruncatedEGF,
    binomial_row,
    default_truncation,
    egf_div,
    egf_exp,
    egf_mul,
    egf_scale_arg,
)

from conftest import cyclo

L = 8


@st.composite
def series(draw, L=L, unit=False):
    coeffs = [draw(cyclo(4)) for _ in range(L + 1)]
    if unit and coeffs[0].is_zero():
        coeffs[0] = CycloRational.from_rational(1)
    return TruncatedEGF(coeffs)


def test_exp_examples():
    assert egf_exp(0, 3).coeffs == (1, 0, 0, 0)
    assert egf_exp(1, 3).coeffs == (1, 1, 1, 1)
    assert egf_exp(2, 2).coeffs == (1, 2, 4)


def test_mul_examples():
    assert egf_mul(egf_exp(1, 2), egf_exp(1, 2)).coeffs == (1, 2, 4)
    f = TruncatedEGF([3, Fraction(1, 2), -1, 7])
    assert egf_mul(f, TruncatedEGF.constant(1, 3)) == f
    # (e^t + 1) * 2 / (e^t + 1) round trip
    one_plus = egf_exp(1, 4) + 1
    quotient = egf_div(TruncatedEGF.constant(2, 4), one_plus)
    assert egf_mul(one_plus, quotient).coeffs == (2, 0, 0, 0, 0)


def test_div_gives_classical_euler_numbers():
    two = TruncatedEGF([2, 0, 0, 0, 0])
    h = egf_div(two, TruncatedEGF([2, 1, 1, 1, 1]))
    assert h.coeffs == (1, Fraction(-1, 2), 0, Fraction(1, 4), 0)
    f = TruncatedEGF([1, 2, 3])
    assert egf_div(f, TruncatedEGF.constant(1, 2)) == f


def test_div_by_zero_constant_term():
    with pytest.raises(ZeroDivisionError):
        egf_div(egf_exp(1, 3), TruncatedEGF([0, 1, 1, 1]))


def test_truncation_is_minimum():
    assert egf_mul(egf_exp(1, 5), egf_exp(1, 3)).order_bound == 3
    assert (egf_exp(1, 2) + egf_exp(2, 6)).order_bound == 2


def test_scale_arg_examples():
    f = TruncatedEGF([5, 1, 2, 3])
    assert egf_scale_arg(f, 1) == f
    assert egf_scale_arg(f, 0).coeffs == (5, 0, 0, 0)
    assert egf_scale_arg(egf_exp(1, 6), 3) == egf_exp(3, 6)
    assert egf_scale_arg(f, Fraction(1, 2)).coeffs == (5, Fraction(1, 2), Fraction(1, 2), Fraction(3, 8))


def test_binomial_rows_exact_beyond_machine_range():
    import math

    row = binomial_row(70)
    assert row == tuple(math.comb(70, i) for i in range(71))
    assert sum(row) == 2**70


def test_default_truncation(monkeypatch):
    monkeypatch.delenv("EULERCHI_TRUNCATION", raising=False)
    assert default_truncation() == 16
    monkeypatch.setenv("EULERCHI_TRUNCATION", "20")
    assert default_truncation() == 20


@settings(max_examples=40, deadline=None)
@given(series(), series(), series())
def test_mul_commutative_associative(f, g, h):
    assert egf_mul(f, g) == egf_mul(g, f)
    assert egf_mul(egf_mul(f, g), h) == egf_mul(f, egf_mul(g, h))


@settings(max_examples=40, deadline=None)
@given(series(unit=True))
def test_reciprocal_round_trip(f):
    unit = TruncatedEGF.constant(1, L)
    assert egf_mul(egf_div(unit, f), f) == unit


@settings(max_examples=40, deadline=None)
@given(series(), series(unit=True))
def test_div_undoes_mul(f, g):
    assert egf_div(egf_mul(f, g), g) == f


@settings(max_examples=40, deadline=None)
@given(cyclo(), cyclo())
def test_exp_addition(a, b):
    assert egf_mul(egf_exp(a, L), egf_exp(b, L)) == egf_exp(a + b, L)
