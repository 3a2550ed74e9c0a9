"""The associative algebra generated by ad S: radical, idempotents, complete reducibility."""

import logging
import math
import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from sympy.polys.domains import QQ

from ..exceptions import BSNotCommuting, DecompositionMismatch, LemmaShapeViolation
from ..lie import LieAlgebra, bracket_subspaces, bracket_with_algebra
from ..linalg import (
    Matrix,
    Rational,
    Subquotient,
    Subspace,
    ZERO,
    kernel_of_rows,
    operator_closure,
    trace_form_radical,
    unit_vectors,
)
from ..linalg.matrix import flatten, matrix_from_rows
from ..linalg.operators import OperatorBasis, combine_operators, nilpotency_index
from .radical import RadicalData, solvable_radical
from .retry import UnluckySeed, with_seed_retries
from .semisimple import minimal_polynomial, rational_roots

logger = logging.getLogger(__name__)


@dataclass
class A0Data:
    """A0 = span of words in ad S, its radical J and a complement spanned by idempotents."""

    S: Subspace
    A0_basis: List[Matrix] = field(default_factory=list)
    radical_basis: List[Matrix] = field(default_factory=list)
    tildeA0_basis: List[Matrix] = field(default_factory=list)
    idempotents: List[Matrix] = field(default_factory=list)

    def to_dict(self) -> Dict:
        return {
            "S_dim": self.S.dim,
            "A0_dim": len(self.A0_basis),
            "radical_dim": len(self.radical_basis),
            "tildeA0_dim": len(self.tildeA0_basis),
            "idempotents": len(self.idempotents),
        }


def _is_zero(op: Matrix) -> bool:
    return not any(flatten(op))


def check_decomposition(
    algebra: LieAlgebra, B: Subspace, S: Subspace, radical: RadicalData
) -> None:
    """Necessary conditions for L = B ⊕ S ⊕ N with S ⊆ R complementing N."""
    R = radical.R
    problems = []
    if not (B & R).is_zero():
        problems.append("B meets the radical")
    if B.dim + R.dim != algebra.dim:
        problems.append("dim B + dim R differs from dim L")
    if not R.contains(S):
        problems.append("S is not contained in the radical")
    if not (S & bracket_with_algebra(algebra, R)).is_zero():
        problems.append("S meets [L, R], which lies in the nilpotent radical")
    if radical.is_nilpotent and not S.is_zero():
        problems.append("R is nilpotent, so N = R and S must be 0")
    if problems:
        raise DecompositionMismatch(
            f"L = B ⊕ S ⊕ N fails: {problems[0]}", problems=problems,
        )


def wedderburn_split(
    algebra: LieAlgebra,
    B: Subspace,
    S: Subspace,
    radical: Optional[RadicalData] = None,
) -> A0Data:
    """
    Split A0 = alg(ad S) as Ã0 ⊕ J(A0) with Ã0 spanned by orthogonal idempotents.

    J(A0) is the trace-form radical; idempotents of the commutative quotient
    A0/J are read off the eigenvectors of a generic multiplication operator
    and lifted by e <- 3e^2 - 2e^3.
    """
    if not bracket_subspaces(algebra, B, S).is_zero():
        raise BSNotCommuting("[B, S] must vanish", B_dim=B.dim, S_dim=S.dim)
    radical = radical or solvable_radical(algebra)
    check_decomposition(algebra, B, S, radical)

    data = A0Data(S=S)
    if S.is_zero():
        return data

    n = algebra.dim
    generators = [algebra.adjoint_matrix(s) for s in S.basis]
    a0 = operator_closure(generators, n, unital=False)
    data.A0_basis = a0
    radical_coeffs = trace_form_radical(a0)
    data.radical_basis = [combine_operators(c, a0, n) for c in radical_coeffs.basis]

    quotient = Subquotient(Subspace.full(len(a0)), radical_coeffs)
    m = quotient.dim
    if m == 0:
        logger.debug(f"A0 of dim {len(a0)} is nilpotent; no idempotents")
        return data

    space = OperatorBasis(a0)
    lifts = [combine_operators(quotient.lift(e), a0, n) for e in unit_vectors(m)]

    def project(op: Matrix) -> List[Rational]:
        coords = space.coordinates(op)
        if coords is None:
            raise LemmaShapeViolation("A0 is not closed under composition")
        return quotient.project(coords)

    for i in range(m):
        for j in range(i + 1, m):
            if any(project(lifts[i] * lifts[j] - lifts[j] * lifts[i])):
                raise LemmaShapeViolation("A0/J(A0) is not commutative", pair=[i, j])

    bar_idempotents = _quotient_idempotents(lifts, project, m)

    steps = math.ceil(math.log2(max(nilpotency_index(data.radical_basis, n), 1))) + 2
    E = matrix_from_rows([[ZERO] * n for _ in range(n)], n)
    idempotents = []
    for coords in bar_idempotents:
        a = combine_operators(quotient.lift(coords), a0, n)
        a = a - E * a - a * E + E * a * E
        e = a
        for _ in range(steps):
            square = e * e
            e = combine_operators([QQ(3), QQ(-2)], [square, square * e], n)
        if not _is_zero(e * e - e):
            raise LemmaShapeViolation("Idempotent lifting did not converge", steps=steps)
        idempotents.append(e)
        E = E + e

    for i, ei in enumerate(idempotents):
        for j, ej in enumerate(idempotents):
            product = ei * ej
            if not _is_zero(product - ei if i == j else product):
                raise LemmaShapeViolation("Lifted idempotents are not orthogonal", pair=[i, j])

    flats = Subspace.span((flatten(e) for e in idempotents + data.radical_basis), n * n)
    if flats.dim != len(a0):
        raise LemmaShapeViolation(
            "Idempotents and J(A0) do not span A0",
            A0_dim=len(a0), spanned=flats.dim,
        )
    data.idempotents = idempotents
    data.tildeA0_basis = list(idempotents)
    logger.debug(f"A0 dim {len(a0)} = {len(idempotents)} idempotents + J dim {len(data.radical_basis)}")
    return data


@with_seed_retries(
    on_exhausted=lambda e: LemmaShapeViolation(
        "A0/J(A0) is not a sum of copies of QQ", detail=str(e)
    )
)
def _quotient_idempotents(lifts: List[Matrix], project, m: int, seed: int = 0) -> List[List[Rational]]:
    rng = random.Random(2003 + seed)
    generic = [QQ(rng.randint(-97, 97)) for _ in range(m)]
    generic_op = combine_operators(generic, lifts, lifts[0].shape[0])

    columns = [project(generic_op * lifts[j]) for j in range(m)]
    mult = matrix_from_rows([[columns[j][i] for j in range(m)] for i in range(m)], m)
    roots = rational_roots(minimal_polynomial(mult))
    if len(roots) != m:
        raise UnluckySeed(f"multiplication operator has {len(roots)} distinct rational eigenvalues, need {m}")

    mult_rows = [[columns[j][i] for j in range(m)] for i in range(m)]
    result = []
    for root in roots:
        shifted = [[v - (root if i == j else ZERO) for j, v in enumerate(row)]
                   for i, row in enumerate(mult_rows)]
        vector = kernel_of_rows(shifted, m).basis[0]
        op = combine_operators(vector, lifts, lifts[0].shape[0])
        square = project(op * op)
        scale = next(s / v for s, v in zip(square, vector) if v)
        if not scale or [scale * v for v in vector] != square:
            raise UnluckySeed("eigenvector is not proportional to an idempotent")
        result.append([v / scale for v in vector])
    return result


def complete_reducibility_check(algebra: LieAlgebra, operators: Sequence[Matrix]) -> bool:
    """
    True iff the unital algebra generated by the operators has zero trace-form radical.

    For the faithful module L in characteristic 0 this is complete reducibility.
    """
    basis = operator_closure(list(operators), algebra.dim, unital=True)
    return trace_form_radical(basis).is_zero()


def unital_envelope_dim(operators: Sequence[Matrix], n: int) -> int:
    if n == 0:
        return 0
    return len(operator_closure(list(operators), n, unital=True))


@with_seed_retries(on_exhausted=lambda e: UnluckySeed(str(e)))
def _split_center(
    lifts: List[Matrix], project, center: Subspace, m: int, seed: int = 0
) -> List[int]:
    rng = random.Random(3001 + seed)
    coeffs = [QQ(rng.randint(-97, 97)) for _ in range(center.dim)]
    z = combine_operators(center.combine(coeffs), lifts, lifts[0].shape[0])
    columns = [project(z * lifts[j]) for j in range(m)]
    mult_rows = [[columns[j][i] for j in range(m)] for i in range(m)]
    roots = rational_roots(minimal_polynomial(matrix_from_rows(mult_rows, m)))
    if len(roots) != center.dim:
        raise UnluckySeed(f"central element has {len(roots)} rational eigenvalues, center has dim {center.dim}")
    blocks = []
    for root in roots:
        shifted = [[v - (root if i == j else ZERO) for j, v in enumerate(row)]
                   for i, row in enumerate(mult_rows)]
        blocks.append(kernel_of_rows(shifted, m).dim)
    return blocks


def semisimple_part_is_split(basis: Sequence[Matrix], n: int) -> bool:
    """
    Heuristic test that A/J(A) is a product of full matrix algebras over QQ.

    Requires the center of A/J(A) to split into copies of QQ and every
    central block to have square dimension. A central simple block of
    square dimension that is a division algebra, such as the rational
    quaternions, still passes.
    """
    basis = list(basis)
    if not basis:
        return True
    radical_coeffs = trace_form_radical(basis)
    quotient = Subquotient(Subspace.full(len(basis)), radical_coeffs)
    m = quotient.dim
    if m == 0:
        return True
    space = OperatorBasis(basis)
    lifts = [combine_operators(quotient.lift(e), basis, n) for e in unit_vectors(m)]

    def project(op: Matrix) -> List[Rational]:
        coords = space.coordinates(op)
        if coords is None:
            raise LemmaShapeViolation("Operator algebra is not closed under composition")
        return quotient.project(coords)

    equations: List[List[Rational]] = []
    for j in range(m):
        commutators = [project(lifts[i] * lifts[j] - lifts[j] * lifts[i]) for i in range(m)]
        equations.extend([commutators[i][o] for i in range(m)] for o in range(m))
    center = kernel_of_rows(equations, m)

    try:
        blocks = _split_center(lifts, project, center, m)
    except UnluckySeed as e:
        logger.debug(f"Center of the semisimple part does not split: {e}")
        return False
    return all(math.isqrt(b) ** 2 == b for b in blocks)
