"""Univariate polynomial algebra over F_q and Z."""

from .factor import (
    Factorization,
    distinct_degree,
    equal_degree,
    factor,
    int_squarefree_decomposition,
    is_irreducible,
    is_square_arithmetic,
    is_square_in_closure,
    monic_square_root,
    radical,
    squarefree_decomposition,
    squarefree_part_geometric,
)
from .intpoly import IntPoly
from .poly import NEG_INF, Poly, discriminant, gcd, lcm, resultant, xgcd
from .rational import RationalFn, height, pth_power_degree, pth_root_chain
from .text import format_poly, parse_bivariate, parse_int_coeffs

__all__ = [
    "Factorization", "IntPoly", "NEG_INF", "Poly", "RationalFn",
    "discriminant", "distinct_degree", "equal_degree", "factor", "format_poly",
    "gcd", "height", "int_squarefree_decomposition", "is_irreducible",
    "is_square_arithmetic", "is_square_in_closure", "lcm", "monic_square_root", "parse_bivariate",
    "parse_int_coeffs", "pth_power_degree", "pth_root_chain", "radical",
    "resultant", "squarefree_decomposition", "squarefree_part_geometric", "xgcd",
]
