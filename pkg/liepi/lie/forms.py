"""Invariant bilinear forms."""

from typing import List

from ..linalg import ZERO, Matrix, Rational, matrix_from_rows
from .algebra import LieAlgebra


def killing_form(algebra: LieAlgebra) -> Matrix:
    """K_ij = trace(ad e_i ∘ ad e_j)."""
    n = algebra.dim
    ads = [algebra.ad_basis(i) for i in range(n)]
    rows: List[List[Rational]] = [[sum((ads[i] * ads[j]).diagonal(), ZERO) for j in range(n)] for i in range(n)]
    return matrix_from_rows(rows, n)
