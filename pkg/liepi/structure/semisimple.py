"""Simple and H-simple decompositions of semisimple algebras via the centroid."""

import logging
import random
from dataclasses import dataclass, field
from typing import Dict, List

from sympy import Poly, Symbol
from sympy.polys.domains import QQ

from ..action import ActionAlgebra, apply_to_subspace, is_invariant
from ..exceptions import GroupSumNotInvariant, NonSplitComponent, NotSemisimple
from ..lie import LieAlgebra, killing_form
from ..linalg import (
    Matrix,
    OperatorSpan,
    Rational,
    Subspace,
    ZERO,
    identity,
    kernel_of_rows,
    rank,
    rows_of,
    solve,
)
from ..linalg.matrix import flatten, unflatten
from ..linalg.operators import combine_operators
from .retry import UnluckySeed, with_seed_retries

logger = logging.getLogger(__name__)

_X = Symbol("x")


@dataclass
class SemisimpleDecomposition:
    """Simple ideals B_1, ..., B_q of a semisimple algebra, in its coordinates."""

    algebra: LieAlgebra
    components: List[Subspace] = field(default_factory=list)
    centroid_dims: List[int] = field(default_factory=list)

    def to_dict(self) -> Dict:
        return {
            "components": [
                {"dim": c.dim, "basis": c.to_json(), "centroid_dim": d}
                for c, d in zip(self.components, self.centroid_dims)
            ]
        }


def is_semisimple(algebra: LieAlgebra) -> bool:
    return rank(killing_form(algebra)) == algebra.dim


def centroid(algebra: LieAlgebra) -> List[Matrix]:
    """Basis of {T : T∘ad e_i = ad e_i∘T for every i}."""
    n = algebra.dim
    ads = [algebra.ad_basis_rows(i) for i in range(n)]
    equations: List[List[Rational]] = []
    for a in ads:
        for r in range(n):
            for c in range(n):
                row = [ZERO] * (n * n)
                for k in range(n):
                    if a[k][c]:
                        row[r * n + k] += a[k][c]
                    if a[r][k]:
                        row[k * n + c] -= a[r][k]
                if any(row):
                    equations.append(row)
    space = kernel_of_rows(equations, n * n)
    return [unflatten(v, n) for v in space.basis]


def minimal_polynomial(op: Matrix) -> Poly:
    """Monic minimal polynomial from the first linear dependency among I, T, T^2, ..."""
    n = op.shape[0]
    span = OperatorSpan(n)
    powers = [identity(n)]
    span.add(powers[0])
    while True:
        following = powers[-1] * op
        if span.contains(following):
            break
        span.add(following)
        powers.append(following)
    flats = [flatten(p) for p in powers]
    target = flatten(following)
    rows = [[f[r] for f in flats] for r in range(n * n)]
    coeffs = solve(rows, target, len(powers))
    dense = [QQ(1)] + [-c for c in reversed(coeffs)]
    return Poly([QQ.to_sympy(c) for c in dense], _X, domain="QQ")


def rational_roots(poly: Poly) -> List[Rational]:
    """
    Roots of a squarefree polynomial that splits into linear factors over QQ.

    Raises UnluckySeed when the polynomial has a repeated or non-linear factor.
    """
    _, factors = poly.factor_list()
    roots = []
    for factor, multiplicity in factors:
        if multiplicity != 1 or factor.degree() != 1:
            raise UnluckySeed(f"minimal polynomial factor {factor.as_expr()} (multiplicity {multiplicity})")
        a, b = factor.all_coeffs()
        roots.append(QQ.from_sympy(-b / a))
    return sorted(roots)


def _component_key(u: Subspace):
    return (u.pivots, u.basis)


@with_seed_retries(
    on_exhausted=lambda e: NonSplitComponent(
        "A simple component is not absolutely simple: its centroid does not split over QQ",
        detail=str(e),
    )
)
def _split_by_centroid(algebra: LieAlgebra, gamma: List[Matrix], seed: int = 0) -> List[Subspace]:
    rng = random.Random(1009 + seed)
    coeffs = [QQ(rng.randint(-97, 97)) for _ in gamma]
    generic = combine_operators(coeffs, gamma, algebra.dim)
    roots = rational_roots(minimal_polynomial(generic))
    if len(roots) < 2:
        raise UnluckySeed("generic centroid element is a scalar")

    n = algebra.dim
    generic_rows = rows_of(generic)
    spaces = []
    for root in roots:
        shifted = [[v - (root if i == j else ZERO) for j, v in enumerate(row)]
                   for i, row in enumerate(generic_rows)]
        spaces.append(kernel_of_rows(shifted, n))
    logger.debug(f"Centroid element splits {algebra.name} into {[s.dim for s in spaces]}")
    return spaces


def _decompose(algebra: LieAlgebra) -> List[Subspace]:
    if algebra.dim == 0:
        return []
    gamma = centroid(algebra)
    if len(gamma) == 1:
        return [Subspace.full(algebra.dim)]

    components = []
    for space in _split_by_centroid(algebra, gamma):
        sub = algebra.subalgebra(space, name=f"{algebra.name}_part")
        for inner in _decompose(sub):
            components.append(Subspace.span((space.combine(v) for v in inner.basis), algebra.dim))
    return components


def simple_decomposition(algebra: LieAlgebra) -> SemisimpleDecomposition:
    """
    Split a semisimple algebra into absolutely simple ideals.

    Each step diagonalises a generic centroid element with rational
    eigenvalues and recurses into its eigenspaces; components come out
    sorted by their canonical form.
    """
    if not is_semisimple(algebra):
        raise NotSemisimple(f"{algebra.name} has a degenerate Killing form", dim=algebra.dim)

    components = sorted(_decompose(algebra), key=_component_key)
    dims = []
    for component in components:
        sub = algebra.subalgebra(component)
        dim = len(centroid(sub))
        if dim != 1:
            raise NonSplitComponent(
                "A simple component has a centroid of dimension > 1",
                component_dim=component.dim, centroid_dim=dim,
            )
        dims.append(dim)
    logger.debug(f"{algebra.name} decomposes into components of dims {[c.dim for c in components]}")
    return SemisimpleDecomposition(algebra=algebra, components=components, centroid_dims=dims)


def h_simple_grouping(dec: SemisimpleDecomposition, action: ActionAlgebra) -> List[List[int]]:
    """
    Glue components that the action moves into each other.

    i ~ j iff A(B_i) ∩ B_j ≠ 0; the classes of the generated equivalence are
    returned sorted, each with its sum verified to be invariant.
    """
    q = len(dec.components)
    parent = list(range(q))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, component in enumerate(dec.components):
        moved = apply_to_subspace(action, component)
        for j, other in enumerate(dec.components):
            if i != j and not (moved & other).is_zero():
                parent[find(i)] = find(j)

    groups: Dict[int, List[int]] = {}
    for i in range(q):
        groups.setdefault(find(i), []).append(i)
    result = sorted(groups.values())

    for group in result:
        if not is_invariant(action, group_sum(dec, group)):
            raise GroupSumNotInvariant("Sum of a component group is not invariant under the action",
                                       group=group)
    return result


def group_sum(dec: SemisimpleDecomposition, group: List[int]) -> Subspace:
    total = Subspace.zero(dec.algebra.dim)
    for i in group:
        total = total + dec.components[i]
    return total
