"""Derivation and automorphism generators of an action."""

import logging
from dataclasses import dataclass
from typing import List

from ..exceptions import CompatibilityViolation, DimensionMismatch, MalformedInput, SingularAutomorphism
from ..lie import LieAlgebra
from ..linalg import Matrix, Rational, mat_vec, rank, rows_of

logger = logging.getLogger(__name__)

DERIVATION = "derivation"
AUTOMORPHISM = "automorphism"
KINDS = (DERIVATION, AUTOMORPHISM)


@dataclass(frozen=True)
class ActionGenerator:
    """A named operator on L acting on coordinate columns."""

    name: str
    kind: str
    matrix: Matrix

    def __post_init__(self):
        if self.kind not in KINDS:
            raise MalformedInput(
                f"Generator '{self.name}' has unsupported kind '{self.kind}'",
                suggestions=[f"Use one of: {', '.join(KINDS)}"],
            )
        rows, cols = self.matrix.shape
        if rows != cols:
            raise DimensionMismatch(
                f"Generator '{self.name}' is not square", expected=rows, actual=cols
            )

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def columns(self) -> List[List[Rational]]:
        rows = rows_of(self.matrix)
        return [[row[j] for row in rows] for j in range(self.dim)]

    def inverse(self) -> "ActionGenerator":
        if self.kind != AUTOMORPHISM:
            raise MalformedInput(f"Only automorphisms are inverted, '{self.name}' is a {self.kind}")
        return ActionGenerator(f"{self.name}^-1", AUTOMORPHISM, self.matrix.inv())

    def transport(self, p: Matrix) -> "ActionGenerator":
        """The same operator written in the basis given by the columns of p."""
        return ActionGenerator(self.name, self.kind, p.inv() * self.matrix * p)

    def check(self, algebra: LieAlgebra) -> None:
        """
        Verify the compatibility law on every basis pair i < j.

        Raises CompatibilityViolation naming the first failing pair and
        SingularAutomorphism for a non-invertible automorphism.
        """
        if self.dim != algebra.dim:
            raise DimensionMismatch(
                f"Generator '{self.name}' has size {self.dim}, algebra has dim {algebra.dim}",
                expected=algebra.dim, actual=self.dim,
            )
        if self.kind == AUTOMORPHISM and rank(self.matrix) < self.dim:
            raise SingularAutomorphism(self.name)

        images = self.columns()
        op_rows = rows_of(self.matrix)
        n = algebra.dim
        for i in range(n):
            for j in range(i + 1, n):
                product = algebra.bracket(algebra.basis_vector(i), algebra.basis_vector(j))
                lhs = mat_vec(op_rows, product)
                if self.kind == DERIVATION:
                    first = algebra.bracket(images[i], algebra.basis_vector(j))
                    second = algebra.bracket(algebra.basis_vector(i), images[j])
                    rhs = [a + b for a, b in zip(first, second)]
                else:
                    rhs = algebra.bracket(images[i], images[j])
                if lhs != rhs:
                    logger.debug(f"Generator {self.name} fails on ({i}, {j})")
                    raise CompatibilityViolation(self.name, self.kind, (i, j))