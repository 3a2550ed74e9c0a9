"""The associative operator algebra generated by an action."""

import logging
from typing import List, Optional, Sequence

from ..lie import LieAlgebra
from ..linalg import Matrix, Subquotient, Subspace, matrix_from_rows, operator_closure, rows_of
from .generators import AUTOMORPHISM, ActionGenerator

logger = logging.getLogger(__name__)


class ActionAlgebra:
    """
    A linear basis of the unital algebra generated by the action on L.

    The identity is always the first basis element; automorphism generators
    contribute their inverses to the generating set.
    """

    def __init__(self, ambient: LieAlgebra, basis: List[Matrix], generators: List[ActionGenerator]):
        self.ambient = ambient
        self.basis = basis
        self.generators = generators
        self._basis_rows = [rows_of(op) for op in basis]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def is_trivial(self) -> bool:
        return self.dim == 1

    def basis_rows(self) -> List[List[List]]:
        return self._basis_rows

    def transport(self, p: Matrix, ambient: Optional[LieAlgebra] = None) -> "ActionAlgebra":
        """Conjugate every operator into the basis given by the columns of p."""
        target = ambient if ambient is not None else self.ambient.change_basis(p)
        return build_action_algebra(target, [g.transport(p) for g in self.generators])

    def __repr__(self) -> str:
        return (f"ActionAlgebra(algebra={self.ambient.name!r}, dim={self.dim}, "
                f"generators={[g.name for g in self.generators]})")


def build_action_algebra(algebra: LieAlgebra, generators: Sequence[ActionGenerator]) -> ActionAlgebra:
    """
    Validate generators and close {id} ∪ gens ∪ inverses under composition.

    Raises CompatibilityViolation or SingularAutomorphism for a bad generator.
    """
    generators = list(generators)
    for g in generators:
        g.check(algebra)

    operators: List[Matrix] = [g.matrix for g in generators]
    operators += [g.inverse().matrix for g in generators if g.kind == AUTOMORPHISM]
    basis = operator_closure(operators, algebra.dim, unital=True)
    logger.debug(f"Action algebra on {algebra.name} from {len(generators)} generators: dim {len(basis)}")
    return ActionAlgebra(algebra, basis, generators)


def trivial_action(algebra: LieAlgebra) -> ActionAlgebra:
    return build_action_algebra(algebra, [])


def apply_to_subspace(action: ActionAlgebra, u: Subspace) -> Subspace:
    """span{T v : T in basis(A), v in basis(u)}; always contains u."""
    if u.is_zero():
        return u
    if action.is_trivial:
        return u
    images = [vec for op_rows in action.basis_rows() for vec in u.image(op_rows).basis]
    return Subspace.span(images, u.ambient_dim)


def is_invariant(action: ActionAlgebra, u: Subspace) -> bool:
    """Every generator maps u into u."""
    return all(u.contains(u.image(rows_of(g.matrix))) for g in action.generators)


def induced_action(
    action: ActionAlgebra, quotient: Subquotient, algebra: LieAlgebra
) -> ActionAlgebra:
    """
    The action induced on a quotient L/I by an invariant ideal I.

    `algebra` carries the quotient's structure constants in the coordinates
    of `quotient`.
    """
    induced = [
        ActionGenerator(g.name, g.kind, quotient.induced(g.matrix))
        for g in action.generators
    ]
    return build_action_algebra(algebra, induced)


def operator_generator(name: str, kind: str, rows: Sequence[Sequence], dim: int) -> ActionGenerator:
    return ActionGenerator(name, kind, matrix_from_rows(rows, dim))
