"""Solvable radical and quotient algebras."""

import logging
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from ..exceptions import InternalInconsistency, NotAnIdeal
from ..lie import (
    LieAlgebra,
    bracket_with_algebra,
    is_ideal,
    is_solvable,
    killing_form,
    nilpotency_index,
)
from ..linalg import Matrix, Subquotient, Subspace, kernel_of_rows, mat_vec, matrix_from_rows, rows_of, unit_vectors

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RadicalData:
    """
    The solvable radical R with its nilpotency data.

    p is the least p with R^p = 0 when R is nilpotent (1 for R = 0) and
    None otherwise.
    """

    R: Subspace
    is_nilpotent: bool
    p: Optional[int]

    def to_dict(self) -> Dict:
        return {
            "dim": self.R.dim,
            "basis": self.R.to_json(),
            "nilpotent": self.is_nilpotent,
            "p": self.p,
        }


def solvable_radical(algebra: LieAlgebra) -> RadicalData:
    """
    R = {x : K(x, y) = 0 for all y in [L, L]} (Cartan's criterion, char 0).

    The candidate is checked to be a solvable ideal.
    """
    derived_algebra = bracket_with_algebra(algebra, Subspace.full(algebra.dim))
    killing = rows_of(killing_form(algebra))
    constraints = [mat_vec(killing, y) for y in derived_algebra.basis]
    radical = kernel_of_rows(constraints, algebra.dim) if constraints else Subspace.full(algebra.dim)

    if not is_ideal(algebra, radical):
        raise InternalInconsistency(
            "Killing-orthogonal complement of [L,L] is not an ideal",
            algebra=algebra.name, dim=radical.dim,
        )
    if not is_solvable(algebra, radical):
        raise InternalInconsistency(
            "Killing-orthogonal complement of [L,L] is not solvable",
            algebra=algebra.name, dim=radical.dim,
        )

    p = nilpotency_index(algebra, radical)
    logger.debug(f"Radical of {algebra.name}: dim {radical.dim}, p = {p}")
    return RadicalData(R=radical, is_nilpotent=p is not None, p=p)


def quotient_with_map(algebra: LieAlgebra, ideal: Subspace) -> Tuple[LieAlgebra, Subquotient]:
    """
    L/I on the unit vectors of the non-pivot coordinates of I.

    The returned Subquotient projects L onto quotient coordinates and lifts
    them back onto that complement.
    """
    if not is_ideal(algebra, ideal):
        raise NotAnIdeal(f"Cannot form a quotient of {algebra.name}: subspace is not an ideal",
                         dim=ideal.dim)
    quotient = Subquotient(Subspace.full(algebra.dim), ideal)
    q = quotient.dim
    lifts = [quotient.lift(e) for e in unit_vectors(q)]
    table = {}
    for a in range(q):
        for b in range(a + 1, q):
            value = quotient.project(algebra.bracket(lifts[a], lifts[b]))
            nonzero = {k: c for k, c in enumerate(value) if c}
            if nonzero:
                table[(a, b)] = nonzero
    labels = [algebra.labels[i] for i in ideal.complement_indices()]
    return LieAlgebra(q, table, name=f"{algebra.name}/I", labels=labels), quotient


def quotient_algebra(algebra: LieAlgebra, ideal: Subspace) -> Tuple[LieAlgebra, Matrix]:
    """Structure constants of L/I together with the projection matrix."""
    quotient_alg, quotient = quotient_with_map(algebra, ideal)
    pi = matrix_from_rows(quotient.projection_rows(), algebra.dim)
    return quotient_alg, pi