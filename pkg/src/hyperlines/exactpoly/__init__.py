"""Exact bivariate polynomial arithmetic in the Chern roots ``a``, ``b``."""
from hyperlines.exactpoly.bipoly import (
    A,
    B,
    ONE,
    VANDERMONDE,
    ZERO,
    BiPoly,
    InvariantViolation,
    PreconditionError,
    add,
    divide_by_vandermonde,
    is_symmetric,
    mul,
    pow,
    product,
)
from hyperlines.exactpoly.schur import (
    Partition2,
    SchurExpansion,
    from_schur,
    schur_poly,
    to_elementary,
    to_schur,
)

__all__ = [
    "A",
    "B",
    "ONE",
    "VANDERMONDE",
    "ZERO",
    "BiPoly",
    "InvariantViolation",
    "Partition2",
    "PreconditionError",
    "SchurExpansion",
    "add",
    "divide_by_vandermonde",
    "from_schur",
    "is_symmetric",
    "mul",
    "pow",
    "product",
    "schur_poly",
    "to_elementary",
    "to_schur",
]
