"""Exceptional (X1) polynomial subspaces and the X1-Jacobi / X1-Laguerre
orthogonal polynomial families.

The heavy lifting happens in the C++ extension ``x1poly._core``: exact
rational arithmetic for the algebra, controlled-precision quadrature for the
analysis. Exact values cross the boundary as strings ("p/q" rationals,
coefficient lists); numeric results are floats with error estimates.
"""

from x1poly._core import (
    bochner_classify,
    classify_subspace,
    d2_dimension,
    fundamental_covariant,
    gram_matrix,
    make_x1_operator,
    norm_squared,
    precision_bits,
    set_precision_bits,
    x1_eigenpoly,
    x1_jacobi,
    x1_laguerre,
)

__all__ = [
    "bochner_classify",
    "classify_subspace",
    "d2_dimension",
    "fundamental_covariant",
    "gram_matrix",
    "make_x1_operator",
    "norm_squared",
    "precision_bits",
    "set_precision_bits",
    "x1_eigenpoly",
    "x1_jacobi",
    "x1_laguerre",
]
