"""S_n-cocharacters of the evaluation image."""

import logging
from dataclasses import dataclass, field
from math import factorial
from typing import Dict, List

from sympy.polys.domains import QQ

from ..action import ActionAlgebra
from ..exceptions import NonIntegralMultiplicity
from ..lie import LieAlgebra
from ..linalg import format_rational
from ..linalg.echelon import EchelonAccumulator
from .evaluation import DEFAULT_BUDGET, EvaluationSpace, evaluation_basis
from .partitions import Partition, class_size, hook_dim, mn_character, partitions, representative

logger = logging.getLogger(__name__)


@dataclass
class CocharacterReport:
    n: int
    codim: int
    multiplicities: Dict[Partition, int] = field(default_factory=dict)
    traces: Dict[Partition, int] = field(default_factory=dict)

    def nonzero(self) -> Dict[Partition, int]:
        return {shape: m for shape, m in self.multiplicities.items() if m}

    def dimension_check(self) -> int:
        """Σ_λ m(λ) · hook_dim(λ); equals codim."""
        return sum(m * hook_dim(shape) for shape, m in self.multiplicities.items())

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "codim": self.codim,
            "multiplicities": [
                {"lambda": list(shape.parts), "m": m}
                for shape, m in self.multiplicities.items()
            ],
        }


def permutation_trace(space: EvaluationSpace, accumulator: EchelonAccumulator, sigma) -> int:
    """
    Trace of σ on W from its RREF basis.

    The coefficient of basis row w_l in a vector of W is its entry at the
    pivot of w_l, so tr σ = Σ_l (σ w_l)[pivot_l].
    """
    total = QQ(0)
    for row, pivot in zip(accumulator.basis(), accumulator.pivots):
        total += space.act(row, sigma).get(pivot, QQ(0))
    if QQ.denom(total) != 1:
        raise NonIntegralMultiplicity(f"Trace of {sigma} on W is not an integer", value=str(total))
    return int(QQ.numer(total))


def cocharacter_multiplicities(
    algebra: LieAlgebra,
    action: ActionAlgebra,
    n: int,
    budget: int = DEFAULT_BUDGET,
    max_workers: int = 1,
) -> CocharacterReport:
    """
    m(λ) = (1/n!) Σ_μ |class μ| χ_λ(μ) tr(σ_μ | W) for every λ ⊢ n.

    One representative permutation per cycle type is traced.
    """
    space, accumulator = evaluation_basis(algebra, action, n, budget, max_workers)
    codim = accumulator.rank
    shapes = partitions(n)
    traces = {mu: permutation_trace(space, accumulator, representative(mu)) for mu in shapes}

    report = CocharacterReport(n=n, codim=codim, traces=traces)
    for shape in shapes:
        weighted = QQ(
            sum(class_size(mu) * mn_character(shape, mu) * traces[mu] for mu in shapes),
            factorial(n),
        )
        if QQ.denom(weighted) != 1 or weighted < 0:
            raise NonIntegralMultiplicity(
                f"Multiplicity of {shape} is {format_rational(weighted)}, not a nonnegative integer",
                shape=list(shape.parts), value=format_rational(weighted),
            )
        report.multiplicities[shape] = int(QQ.numer(weighted))

    if report.dimension_check() != codim:
        raise NonIntegralMultiplicity(
            "Cocharacter dimensions do not add up to the codimension",
            codim=codim, total=report.dimension_check(),
        )
    logger.debug(f"Cocharacter of {algebra.name} at n = {n}: {[(str(s), m) for s, m in report.nonzero().items()]}")
    return report


def vanishing_violations(report: CocharacterReport, d: int, p: int) -> List[Partition]:
    """Shapes with Σ_{k>d} λ_k ≥ p and m(λ) ≠ 0."""
    return [shape for shape, m in report.multiplicities.items() if m and shape.tail(d) >= p]
