"""Exact tools for Sturmian words and their reversible Christoffel factorizations."""

from .exact import QuadraticReal, parse_number, qr_cmp, qr_floor, qr_fract, qr_make
from .words import (
    BinaryWord,
    MechanicalSpec,
    characteristic_prefix,
    factor_complexity,
    is_balanced,
    mechanical_prefix,
    reversal,
    singular_prefix,
    sturmian_prefix_check,
)
from .christoffel import (
    ChristoffelWord,
    christoffel_of_slope,
    christoffel_tree,
    classify_christoffel,
    is_central,
    standard_factorization,
)
from .morphisms import E, PHI, PHI_TILDE, Morphism, apply, compose, is_sturmian_morphism
from .rcfact import (
    RCFactorization,
    abelian_compare,
    coarsen,
    compare_specs,
    refine,
    verify_theorem_main,
)
from .iet import IETParams, iet_word, rc_as_3iet, three_gap, verify_3iet

__version__ = "0.1.0"

__all__ = [
    "QuadraticReal", "parse_number", "qr_cmp", "qr_floor", "qr_fract", "qr_make",
    "BinaryWord", "MechanicalSpec", "characteristic_prefix", "factor_complexity",
    "is_balanced", "mechanical_prefix", "reversal", "singular_prefix", "sturmian_prefix_check",
    "ChristoffelWord", "christoffel_of_slope", "christoffel_tree", "classify_christoffel",
    "is_central", "standard_factorization",
    "E", "PHI", "PHI_TILDE", "Morphism", "apply", "compose", "is_sturmian_morphism",
    "RCFactorization", "abelian_compare", "coarsen", "compare_specs", "refine",
    "verify_theorem_main",
    "IETParams", "iet_word", "rc_as_3iet", "three_gap", "verify_3iet",
    "FIBONACCI_SLOPE",
]

FIBONACCI_SLOPE = QuadraticReal(3, -1, 2, 5)
