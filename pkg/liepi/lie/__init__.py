"""Lie algebras as structure-constant tables."""

from .algebra import LieAlgebra, ValidationReport, Element, validate_algebra, bracket
from .subspaces import (
    bracket_subspaces,
    bracket_with_algebra,
    ideal_closure,
    is_ideal,
    is_subalgebra,
    series,
    lower_central,
    derived,
    is_nilpotent,
    is_solvable,
    nilpotency_index,
    DERIVED,
    LOWER_CENTRAL,
)
from .forms import killing_form

__all__ = [
    "LieAlgebra",
    "ValidationReport",
    "Element",
    "validate_algebra",
    "bracket",
    "bracket_subspaces",
    "bracket_with_algebra",
    "ideal_closure",
    "is_ideal",
    "is_subalgebra",
    "series",
    "lower_central",
    "derived",
    "is_nilpotent",
    "is_solvable",
    "nilpotency_index",
    "DERIVED",
    "LOWER_CENTRAL",
    "killing_form",
]
