"""Automatic PI-exponent for algebras whose solvable radical is nilpotent."""

import logging
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Dict, List, Optional, Tuple

from ..action import ActionAlgebra, apply_to_subspace, induced_action, is_invariant
from ..exceptions import InternalInconsistency, RadicalNotInvariant, RadicalNotNilpotent
from ..lie import LieAlgebra
from ..linalg import Subspace
from ..structure import (
    LeviData,
    RadicalData,
    group_sum,
    h_simple_grouping,
    levi_subalgebra,
    quotient_with_map,
    semisimple_part_is_split,
    simple_decomposition,
    solvable_radical,
)
from .reach import ReachSet, left_normed_subspaces, reach_set, search_chain

logger = logging.getLogger(__name__)

EXPONENT = "exponent"
NILPOTENT = "nilpotent"


@dataclass
class ExponentResult:
    """d with the component tuple and chain that witness it."""

    d: int
    verdict: str
    witness_components: List[int] = field(default_factory=list)
    witness_q: List[int] = field(default_factory=list)
    witness_subspaces: List[Subspace] = field(default_factory=list)
    component_dims: List[int] = field(default_factory=list)
    groups: List[List[int]] = field(default_factory=list)
    p: Optional[int] = None
    split_action: bool = True

    @property
    def r(self) -> int:
        return len(self.witness_components)

    def to_dict(self) -> Dict:
        return {
            "d": self.d,
            "verdict": self.verdict,
            "witness_components": self.witness_components,
            "witness_q": self.witness_q,
            "witness_dims": [u.dim for u in self.witness_subspaces],
            "component_dims": self.component_dims,
            "groups": self.groups,
            "p": self.p,
            "split_heuristic": self.split_action,
        }


@dataclass
class ComponentData:
    """H-simple components of L/N lifted into L, with their reach sets."""

    radical: RadicalData
    levi: LeviData
    quotient_components: List[Subspace]
    lifted: List[Subspace]
    reach_sets: List[ReachSet]
    groups: List[List[int]]


def ordered_tuples(dims: List[int]) -> List[Tuple[int, ...]]:
    """
    Ordered tuples of distinct component indices.

    Largest total dimension first; ties broken lexicographically.
    """
    indices = range(len(dims))
    tuples = [
        perm
        for size in range(1, len(dims) + 1)
        for subset in combinations(indices, size)
        for perm in permutations(subset)
    ]
    return sorted(tuples, key=lambda t: (-sum(dims[i] for i in t), t))


def h_components(
    algebra: LieAlgebra, action: ActionAlgebra, levi: Optional[LeviData] = None
) -> ComponentData:
    radical = solvable_radical(algebra)
    if not radical.is_nilpotent:
        raise RadicalNotNilpotent()
    if not is_invariant(action, radical.R):
        raise RadicalNotInvariant()

    levi = levi or levi_subalgebra(algebra, radical)
    quotient_alg, quotient = quotient_with_map(algebra, radical.R)
    quotient_action = induced_action(action, quotient, quotient_alg)

    decomposition = simple_decomposition(quotient_alg)
    groups = h_simple_grouping(decomposition, quotient_action)
    components = [group_sum(decomposition, g) for g in groups]
    lifted = [levi.image(c) for c in components]
    reach_sets = [reach_set(algebra, apply_to_subspace(action, u)) for u in lifted]
    return ComponentData(
        radical=radical,
        levi=levi,
        quotient_components=components,
        lifted=lifted,
        reach_sets=reach_sets,
        groups=groups,
    )


def nilpotent_radical_exponent(
    algebra: LieAlgebra, action: ActionAlgebra, levi: Optional[LeviData] = None
) -> ExponentResult:
    """
    d = max dim(B_i1 ⊕ ... ⊕ B_ir) over distinct H-simple components with

        [[A κ(B_i1), L, ..., L], [A κ(B_i2), L, ..., L], ..., [A κ(B_ir), L, ..., L]] ≠ 0

    for some numbers q_j ≥ 0 of L's. Requires R = N and N invariant.
    """
    data = h_components(algebra, action, levi)
    dims = [c.dim for c in data.quotient_components]

    split = semisimple_part_is_split(action.basis, algebra.dim)
    if not split:
        logger.warning(
            f"Action algebra on {algebra.name} fails the split heuristic "
            f"(the center of A/J(A) does not split over QQ); d is computed over QQ"
        )

    for candidate in ordered_tuples(dims):
        found = search_chain(algebra, [data.reach_sets[i] for i in candidate])
        if found is None:
            continue
        qs, chosen, final = found
        if left_normed_subspaces(algebra, chosen).is_zero():
            raise InternalInconsistency("Witness chain re-evaluates to zero",
                                        components=list(candidate), q=qs)
        d = sum(dims[i] for i in candidate)
        logger.debug(f"Exponent of {algebra.name}: d = {d} via components {candidate}, q = {qs}")
        return ExponentResult(
            d=d,
            verdict=EXPONENT,
            witness_components=list(candidate),
            witness_q=qs,
            witness_subspaces=chosen,
            component_dims=dims,
            groups=data.groups,
            p=data.radical.p,
            split_action=split,
        )

    return ExponentResult(
        d=0,
        verdict=NILPOTENT,
        component_dims=dims,
        groups=data.groups,
        p=data.radical.p,
        split_action=split,
    )
