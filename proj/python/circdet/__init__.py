"""Exact coefficients of the circulant determinant expansion."""

from ._circdet import (
    classify_counts,
    coefficient,
    coefficient_detailed,
    expand,
    is_condition8,
    reduce_representative,
    zero_by_family,
)

__all__ = [
    "classify_counts",
    "coefficient",
    "coefficient_detailed",
    "expand",
    "is_condition8",
    "reduce_representative",
    "zero_by_family",
]
