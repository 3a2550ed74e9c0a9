"""Levi subalgebras along a nilpotent radical."""

import logging
from dataclasses import dataclass
from math import factorial
from typing import Dict, List, Sequence

from sympy.polys.domains import QQ

from ..exceptions import InternalInconsistency, NoSolution, RadicalNotNilpotent
from ..lie import LieAlgebra, lower_central
from ..linalg import (
    Matrix,
    Rational,
    Subquotient,
    Subspace,
    ZERO,
    identity,
    mat_vec,
    matrix_from_rows,
    rows_of,
    solve,
    unit_vectors,
)
from .radical import RadicalData, quotient_with_map

logger = logging.getLogger(__name__)


@dataclass
class LeviData:
    """
    A Levi subalgebra B with section kappa: L/R -> L and projection pi.

    kappa is dim L x dim Q (columns are images of quotient basis vectors);
    pi is dim Q x dim L.
    """

    B: Subspace
    kappa: Matrix
    pi: Matrix
    quotient: LieAlgebra

    def kappa_columns(self) -> List[List[Rational]]:
        rows = rows_of(self.kappa)
        q = self.kappa.shape[1]
        return [[row[a] for row in rows] for a in range(q)]

    def section(self, coords: Sequence[Rational]) -> List[Rational]:
        return mat_vec(rows_of(self.kappa), coords)

    def image(self, u: Subspace) -> Subspace:
        """kappa(u) for a subspace u of the quotient."""
        rows = rows_of(self.kappa)
        return Subspace.span((mat_vec(rows, v) for v in u.basis), self.B.ambient_dim)

    def to_dict(self) -> Dict:
        return {"dim": self.B.dim, "basis": self.B.to_json()}


def levi_subalgebra(algebra: LieAlgebra, radical: RadicalData) -> LeviData:
    """
    Bracket-preserving section of L -> L/R, corrected along R ⊇ R^2 ⊇ ... ⊇ 0.

    Stage t replaces kappa by kappa + phi with phi: Q -> R^t solving

        phi([f_a, f_b]) - [kappa f_a, phi f_b] + [kappa f_b, phi f_a] = -delta(a, b)

    modulo R^(t+1), where delta(a, b) = kappa[f_a, f_b] - [kappa f_a, kappa f_b]
    lies in R^t. Levi's theorem guarantees each system is solvable.
    """
    if not radical.is_nilpotent:
        raise RadicalNotNilpotent(
            "Levi sections are lifted only along a nilpotent radical; supply B in a certificate"
        )

    quotient_alg, quotient = quotient_with_map(algebra, radical.R)
    q = quotient_alg.dim
    n = algebra.dim
    kappa = [quotient.lift(e) for e in unit_vectors(q)]

    terms = lower_central(algebra, radical.R)
    for t in range(len(terms) - 1):
        layer = Subquotient(terms[t], terms[t + 1])
        if layer.dim == 0:
            continue
        kappa = _correct_stage(algebra, quotient_alg, kappa, layer, t + 1)

    B = Subspace.span(kappa, n)
    columns = [[kappa[a][i] for a in range(q)] for i in range(n)]
    kappa_matrix = matrix_from_rows(columns, q)
    pi_matrix = matrix_from_rows(quotient.projection_rows(), n)
    levi = LeviData(B=B, kappa=kappa_matrix, pi=pi_matrix, quotient=quotient_alg)
    verify_levi(algebra, radical, levi)
    logger.debug(f"Levi subalgebra of {algebra.name}: dim {B.dim}")
    return levi


def _defect(algebra: LieAlgebra, quotient_alg: LieAlgebra, kappa, a: int, b: int) -> List[Rational]:
    image = [ZERO] * algebra.dim
    for c, coeff in quotient_alg.basis_product(a, b):
        image = [x + coeff * y for x, y in zip(image, kappa[c])]
    product = algebra.bracket(kappa[a], kappa[b])
    return [x - y for x, y in zip(image, product)]


def _correct_stage(algebra, quotient_alg, kappa, layer: Subquotient, stage: int):
    q = quotient_alg.dim
    m = layer.dim
    lifts = [layer.lift(e) for e in unit_vectors(m)]

    # action[a][s] = class of [kappa f_a, lift e_s] in the layer
    action = [[layer.project(algebra.bracket(kappa[a], lifts[s])) for s in range(m)] for a in range(q)]

    rows: List[List[Rational]] = []
    rhs: List[Rational] = []
    for a in range(q):
        for b in range(a + 1, q):
            block = [[ZERO] * (q * m) for _ in range(m)]
            for c, coeff in quotient_alg.basis_product(a, b):
                for s in range(m):
                    block[s][c * m + s] += coeff
            for s in range(m):
                for out in range(m):
                    block[out][b * m + s] -= action[a][s][out]
                    block[out][a * m + s] += action[b][s][out]
            delta = layer.project(_defect(algebra, quotient_alg, kappa, a, b))
            rows.extend(block)
            rhs.extend(-d for d in delta)

    if not rows:
        return kappa
    solution = solve(rows, rhs, q * m)
    if solution is None:
        raise NoSolution(
            "Levi correction system has no solution; the input is not a Lie algebra",
            stage=stage,
        )
    corrected = []
    for a in range(q):
        phi = layer.lift(solution[a * m:(a + 1) * m])
        corrected.append([x + y for x, y in zip(kappa[a], phi)])
    logger.debug(f"Levi stage {stage}: {len(rows)} equations, {q * m} unknowns")
    return corrected


def verify_levi(algebra: LieAlgebra, radical: RadicalData, levi: LeviData) -> None:
    """pi∘kappa = id, kappa preserves brackets, L = B ⊕ R."""
    q = levi.quotient.dim
    kappa = levi.kappa_columns()
    pi_rows = rows_of(levi.pi)
    for a in range(q):
        if mat_vec(pi_rows, kappa[a]) != unit_vectors(q)[a]:
            raise InternalInconsistency("Levi section is not a right inverse of the projection",
                                        column=a)
        for b in range(a + 1, q):
            if any(_defect(algebra, levi.quotient, kappa, a, b)):
                raise InternalInconsistency("Levi section does not preserve brackets",
                                            pair=[a, b])
    if not (levi.B & radical.R).is_zero() or levi.B.dim + radical.R.dim != algebra.dim:
        raise InternalInconsistency("Levi subalgebra is not a complement of the radical")


def exp_ad(algebra: LieAlgebra, x: Sequence[Rational]) -> Matrix:
    """
    exp(ad x) for ad-nilpotent x, an automorphism with rational entries.

    The series is summed until the power of ad x vanishes.
    """
    ad = algebra.adjoint_matrix(x)
    n = algebra.dim
    total = identity(n)
    power = identity(n)
    for k in range(1, n + 1):
        power = power * ad
        power_rows = rows_of(power)
        if not any(v for row in power_rows for v in row):
            return total
        scaled = [[v * QQ(1, factorial(k)) for v in row] for row in power_rows]
        total = total + matrix_from_rows(scaled, n)
    power_rows = rows_of(power * ad)
    if any(v for row in power_rows for v in row):
        raise InternalInconsistency("exp(ad x) requested for an element whose ad is not nilpotent")
    return total


def perturb_levi(algebra: LieAlgebra, levi: LeviData, automorphism: Matrix) -> LeviData:
    """
    Compose kappa with an automorphism that acts trivially modulo R.

    exp(ad n) for n in a nilpotent radical is such an automorphism.
    """
    kappa = automorphism * levi.kappa
    rows = rows_of(kappa)
    q = kappa.shape[1]
    B = Subspace.span(([row[a] for row in rows] for a in range(q)), algebra.dim)
    return LeviData(B=B, kappa=kappa, pi=levi.pi, quotient=levi.quotient)
