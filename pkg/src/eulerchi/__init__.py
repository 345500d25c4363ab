"""Exact generalized Euler numbers and polynomials attached to Dirichlet
characters, with checkers for their symmetric identities."""

from .dirichlet import Character, UnitGroup, chi_eval, conductor, enumerate_characters, unit_group_structure
from .euler_classical import euler_numbers, euler_poly_eval, euler_polynomial
from .exact_arith import CycloRational, Rational, cyclo_arith, cyclotomic_polynomial, padic_valuation
from .gen_euler import (
    GenEulerTable,
    alternating_power_sum,
    fermionic_partial_sum,
    gen_euler_gf_oracle,
    gen_euler_numbers,
    gen_euler_poly,
    poly_compose_affine,
)
from .powerseries import TruncatedEGF, egf_div, egf_exp, egf_mul, egf_scale_arg
from .xpoly import XPoly

__version__ = "0.1.0"


def clear_caches() -> None:
    """Drop every memo table (Euler numbers, generalized tables, characters)."""
    from . import dirichlet, euler_classical, gen_euler

    euler_classical.clear_cache()
    gen_euler.clear_cache()
    dirichlet._enumerate.cache_clear()
    dirichlet._discrete_logs.cache_clear()
    dirichlet.unit_group_structure.cache_clear()

__all__ = [
    "Character",
    "CycloRational",
    "GenEulerTable",
    "Rational",
    "TruncatedEGF",
    "UnitGroup",
    "XPoly",
    "alternating_power_sum",
    "chi_eval",
    "clear_caches",
    "conductor",
    "cyclo_arith",
    "cyclotomic_polynomial",
    "egf_div",
    "egf_exp",
    "egf_mul",
    "egf_scale_arg",
    "enumerate_characters",
    "euler_numbers",
    "euler_poly_eval",
    "euler_polynomial",
    "fermionic_partial_sum",
    "gen_euler_gf_oracle",
    "gen_euler_numbers",
    "gen_euler_poly",
    "padic_valuation",
    "poly_compose_affine",
    "unit_group_structure",
]
