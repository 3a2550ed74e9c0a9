"""Exact rational linear algebra."""

from .rational import Rational, parse_rational, format_rational, ZERO, ONE
from .matrix import (
    Matrix,
    matrix_from_rows,
    identity,
    rows_of,
    rref,
    rank,
    solve,
    mat_vec,
    choose_primes,
    modular_rank,
    two_prime_rank,
)
from .subspace import (
    Subspace,
    Subquotient,
    kernel,
    kernel_of_rows,
    subspace_sum,
    subspace_intersect,
    unit_vectors,
)
from .echelon import EchelonAccumulator
from .operators import OperatorSpan, operator_closure, trace_form_radical

__all__ = [
    "Rational",
    "parse_rational",
    "format_rational",
    "ZERO",
    "ONE",
    "Matrix",
    "matrix_from_rows",
    "identity",
    "rows_of",
    "rref",
    "rank",
    "solve",
    "mat_vec",
    "choose_primes",
    "modular_rank",
    "two_prime_rank",
    "Subspace",
    "Subquotient",
    "kernel",
    "kernel_of_rows",
    "subspace_sum",
    "subspace_intersect",
    "unit_vectors",
    "EchelonAccumulator",
    "OperatorSpan",
    "operator_closure",
    "trace_form_radical",
]
