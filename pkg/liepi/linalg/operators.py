"""Associative algebras of operators: closure under composition and trace-form radicals."""

import logging
from typing import List, Optional, Sequence

from .matrix import Matrix, flatten, identity, solve, unflatten
from .rational import Rational, ZERO
from .subspace import Subspace, kernel_of_rows

logger = logging.getLogger(__name__)


class OperatorSpan:
    """
    A linearly independent list of n x n operators with an incremental span test.

    Operators are compared as flattened row-major vectors of length n*n.
    """

    def __init__(self, n: int):
        self.n = n
        self.operators: List[Matrix] = []
        self._span = Subspace.zero(n * n)

    def __len__(self) -> int:
        return len(self.operators)

    def contains(self, op: Matrix) -> bool:
        return self._span.contains_vector(flatten(op))

    def add(self, op: Matrix) -> bool:
        """Append op if it enlarges the span; report whether it did."""
        vector = flatten(op)
        if not any(self._span.reduce(vector)):
            return False
        self.operators.append(op)
        self._span = self._span + Subspace.span([vector], self.n * self.n)
        return True

    def coordinates_space(self) -> Subspace:
        return self._span


def operator_closure(
    generators: Sequence[Matrix], n: int, unital: bool = True, limit: Optional[int] = None
) -> List[Matrix]:
    """
    Basis of the associative algebra generated by the operators.

    Breadth-first: every admitted element is multiplied on the left by each
    generator and the product is kept when the span grows. The unital
    variant starts from the identity; the non-unital one from the generators.
    """
    span = OperatorSpan(n)
    if unital:
        span.add(identity(n))
    for g in generators:
        span.add(g)

    position = 0
    while position < len(span.operators):
        current = span.operators[position]
        position += 1
        for g in generators:
            span.add(g * current)
        if limit is not None and len(span) >= limit:
            break
    logger.debug(f"Operator closure of {len(generators)} generators has dimension {len(span)}")
    return list(span.operators)


def combine_operators(coeffs: Sequence[Rational], basis: Sequence[Matrix], n: int) -> Matrix:
    total = [ZERO] * (n * n)
    for c, op in zip(coeffs, basis):
        if c:
            total = [a + c * b for a, b in zip(total, flatten(op))]
    return unflatten(total, n)


def trace_gram(basis: Sequence[Matrix]) -> List[List[Rational]]:
    """Gram matrix tr(a_k a_l) of the trace form on an operator basis."""
    return [[sum((a * b).diagonal(), ZERO) for b in basis] for a in basis]


def trace_form_radical(basis: Sequence[Matrix]) -> Subspace:
    """
    Coefficient vectors of the radical of the trace form.

    In characteristic 0 this is the Jacobson radical of the algebra spanned
    by `basis`, provided the span is closed under composition.
    """
    if not basis:
        return Subspace.zero(0)
    return kernel_of_rows(trace_gram(basis), len(basis))


def is_nilpotent_operator(op: Matrix) -> bool:
    n = op.shape[0]
    power = op
    for _ in range(n):
        if not any(flatten(power)):
            return True
        power = power * op
    return not any(flatten(power))


def nilpotency_index(basis: Sequence[Matrix], n: int) -> int:
    """
    Least k with J^k = 0 for the associative algebra J spanned by `basis`.

    J is assumed nilpotent; the index never exceeds n.
    """
    if not basis:
        return 1
    power: List[Matrix] = list(basis)
    k = 1
    while power and k <= n + 1:
        span = OperatorSpan(n)
        for a in power:
            for b in basis:
                span.add(a * b)
        power = span.operators
        k += 1
    return k


class OperatorBasis:
    """Coordinates of operators with respect to a fixed linearly independent list."""

    def __init__(self, basis: Sequence[Matrix]):
        self.basis = list(basis)
        flats = [flatten(b) for b in self.basis]
        self._rows = [[f[r] for f in flats] for r in range(len(flats[0]))] if flats else []

    def __len__(self) -> int:
        return len(self.basis)

    def coordinates(self, op: Matrix) -> Optional[List[Rational]]:
        """Coefficients of op, or None when op lies outside the span."""
        if not self.basis:
            return [] if not any(flatten(op)) else None
        return solve(self._rows, flatten(op), len(self.basis))
