"""Linear complexity and k-error linear complexity by four routes: the gcd
formula, Berlekamp-Massey, exhaustive error search and coset search, plus
closed-form evaluators."""

from .brute import DEFAULT_PATTERN_BUDGET, klc_brute, pattern_count
from .coset import (
    DEFAULT_DIM_LIMIT,
    construct_optimal_error,
    klc_structured,
    min_weight_coset,
    optimal_error_poly,
)
from .formula import KlcValue, formula_profile, klc_formula, lc_formula
from .linear import berlekamp_massey, lc_gcd, lc_of_int
from .profile import ErrorWitness, KlcEntry, KlcProfile, parse_profile

__all__ = [
    "DEFAULT_DIM_LIMIT",
    "DEFAULT_PATTERN_BUDGET",
    "ErrorWitness",
    "KlcEntry",
    "KlcProfile",
    "KlcValue",
    "berlekamp_massey",
    "construct_optimal_error",
    "formula_profile",
    "klc_brute",
    "klc_formula",
    "klc_structured",
    "lc_formula",
    "lc_gcd",
    "lc_of_int",
    "min_weight_coset",
    "optimal_error_poly",
    "parse_profile",
    "pattern_count",
]
