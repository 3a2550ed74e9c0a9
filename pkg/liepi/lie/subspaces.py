"""Brackets of subspaces, ideals and the canonical series."""

import logging
from typing import List, Optional

from ..exceptions import MalformedInput, NotASubalgebra
from ..linalg import Subspace
from .algebra import LieAlgebra

logger = logging.getLogger(__name__)

DERIVED = "derived"
LOWER_CENTRAL = "lower_central"


def bracket_subspaces(algebra: LieAlgebra, u: Subspace, v: Subspace) -> Subspace:
    """span{[a, b] : a in u, b in v} from basis pairs."""
    if u.is_zero() or v.is_zero():
        return Subspace.zero(algebra.dim)
    products = [algebra.bracket(a, b) for a in u.basis for b in v.basis]
    return Subspace.span(products, algebra.dim)


def bracket_with_algebra(algebra: LieAlgebra, u: Subspace) -> Subspace:
    """[u, L]."""
    return bracket_subspaces(algebra, u, Subspace.full(algebra.dim))


def is_subalgebra(algebra: LieAlgebra, u: Subspace) -> bool:
    return u.contains(bracket_subspaces(algebra, u, u))


def is_ideal(algebra: LieAlgebra, u: Subspace) -> bool:
    return u.contains(bracket_with_algebra(algebra, u))


def ideal_closure(algebra: LieAlgebra, u: Subspace) -> Subspace:
    """Smallest ideal containing u: fixed point of u -> u + [u, L]."""
    current = u
    while True:
        grown = current + bracket_with_algebra(algebra, current)
        if grown == current:
            return current
        current = grown


def series(algebra: LieAlgebra, u: Subspace, mode: str = DERIVED) -> List[Subspace]:
    """
    Derived or lower central series of the subalgebra u.

    The list starts with u and stops before the first repeated term, so a
    series ending in 0 has length equal to the solvability or nilpotency
    degree.
    """
    if mode not in (DERIVED, LOWER_CENTRAL):
        raise MalformedInput(f"Unknown series mode '{mode}'", suggestions=[f"Use '{DERIVED}' or '{LOWER_CENTRAL}'"])
    if not is_subalgebra(algebra, u):
        raise NotASubalgebra("Series requested for a subspace that is not a subalgebra",
                             dim=u.dim)

    terms = [u]
    while True:
        last = terms[-1]
        if mode == DERIVED:
            following = bracket_subspaces(algebra, last, last)
        else:
            following = bracket_subspaces(algebra, last, u)
        if following == last:
            break
        terms.append(following)
    logger.debug(f"{mode} series of a {u.dim}-dim subalgebra of {algebra.name}: "
                 f"{[t.dim for t in terms]}")
    return terms


def lower_central(algebra: LieAlgebra, u: Optional[Subspace] = None) -> List[Subspace]:
    return series(algebra, u if u is not None else Subspace.full(algebra.dim), LOWER_CENTRAL)


def derived(algebra: LieAlgebra, u: Optional[Subspace] = None) -> List[Subspace]:
    return series(algebra, u if u is not None else Subspace.full(algebra.dim), DERIVED)


def is_nilpotent(algebra: LieAlgebra, u: Optional[Subspace] = None) -> bool:
    return lower_central(algebra, u)[-1].is_zero()


def is_solvable(algebra: LieAlgebra, u: Optional[Subspace] = None) -> bool:
    return derived(algebra, u)[-1].is_zero()


def nilpotency_index(algebra: LieAlgebra, u: Optional[Subspace] = None) -> Optional[int]:
    """
    Least p with u^p = 0 (u^1 = u), or None when u is not nilpotent.

    The zero subalgebra has index 1.
    """
    terms = lower_central(algebra, u)
    if not terms[-1].is_zero():
        return None
    return len(terms)
