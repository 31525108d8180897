"""Exact rationals, polynomials, rational functions and sparse linear algebra."""

from .linalg import (
    RatFunMatrix,
    SparseMatrix,
    Vector,
    annihilator,
    charpoly,
    closure,
    coordinates,
    in_span,
    independent_subset,
    is_invariant,
    largest_invariant_subspace,
    nullspace,
    rank,
    rational_eigenspaces,
    ratfunmatrix_from_modes,
    rref,
    span_basis,
)
from .poly import (
    Polynomial,
    Q,
    RatFun,
    as_q,
    cauchy_product,
    inverse_series,
    q_from_str,
    q_to_str,
    ratfun_normalize,
    series_expand,
)

__all__ = [
    "Polynomial",
    "Q",
    "RatFun",
    "RatFunMatrix",
    "SparseMatrix",
    "Vector",
    "annihilator",
    "as_q",
    "cauchy_product",
    "charpoly",
    "closure",
    "coordinates",
    "in_span",
    "independent_subset",
    "inverse_series",
    "is_invariant",
    "largest_invariant_subspace",
    "nullspace",
    "q_from_str",
    "q_to_str",
    "rank",
    "rational_eigenspaces",
    "ratfunmatrix_from_modes",
    "ratfun_normalize",
    "rref",
    "series_expand",
    "span_basis",
]
