"""Exact scalar arithmetic and univariate polynomials."""

from .fields import GF, QQ, Domain, ExtensionField, PrimeField, RationalField, is_prime
from .poly import Poly, poly_gcd
from .ops import (
    find_irreducible_poly,
    is_k_closed,
    poly_irreducible,
    poly_splits,
)
from .factor import factor

__all__ = [
    "GF", "QQ", "Domain", "ExtensionField", "PrimeField", "RationalField", "is_prime",
    "Poly", "poly_gcd", "poly_irreducible", "poly_splits", "find_irreducible_poly",
    "is_k_closed", "factor",
]
