"""Chains U_{q+1} = [U_q, L] and searches over them."""

import logging
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..lie import LieAlgebra, bracket_subspaces, bracket_with_algebra
from ..linalg import Subspace

logger = logging.getLogger(__name__)

ReachSet = Dict[Subspace, int]


def reach_set(algebra: LieAlgebra, u0: Subspace) -> ReachSet:
    """
    Every value of U_0 = u0, U_{q+1} = [U_q, L], mapped to its first q.

    The sequence is deterministic, so it is eventually periodic and the
    iteration stops at the first repeated canonical form.
    """
    seen: ReachSet = {}
    current = u0
    q = 0
    while current not in seen:
        seen[current] = q
        current = bracket_with_algebra(algebra, current)
        q += 1
    logger.debug(f"Reach set from a {u0.dim}-dim subspace: dims {[u.dim for u in seen]}")
    return seen


def search_chain(
    algebra: LieAlgebra, reach_sets: Sequence[ReachSet]
) -> Optional[Tuple[List[int], List[Subspace], Subspace]]:
    """
    First choice V_k in reach_sets[k] with [[V_1, V_2], ..., V_r] != 0.

    Choices are tried depth first in order of increasing q, so the returned
    q tuple is the lexicographically least success. A zero partial bracket
    prunes the branch.
    """
    options = [sorted(rs.items(), key=lambda item: item[1]) for rs in reach_sets]

    def extend(depth: int, partial: Optional[Subspace]) -> Iterator[Tuple[List[int], List[Subspace], Subspace]]:
        if depth == len(options):
            yield [], [], partial
            return
        for subspace, q in options[depth]:
            following = subspace if partial is None else bracket_subspaces(algebra, partial, subspace)
            if following.is_zero():
                continue
            for qs, chosen, final in extend(depth + 1, following):
                yield [q] + qs, [subspace] + chosen, final

    if not options:
        return None
    return next(extend(0, None), None)


def left_normed_subspaces(algebra: LieAlgebra, subspaces: Sequence[Subspace]) -> Subspace:
    result = subspaces[0]
    for u in subspaces[1:]:
        result = bracket_subspaces(algebra, result, u)
    return result
