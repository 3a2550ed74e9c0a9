"""Actions by derivations and automorphisms, represented by their operator image."""

from .generators import ActionGenerator, DERIVATION, AUTOMORPHISM, KINDS
from .algebra import (
    ActionAlgebra,
    build_action_algebra,
    trivial_action,
    apply_to_subspace,
    is_invariant,
    induced_action,
    operator_generator,
)

__all__ = [
    "ActionGenerator",
    "DERIVATION",
    "AUTOMORPHISM",
    "KINDS",
    "ActionAlgebra",
    "build_action_algebra",
    "trivial_action",
    "apply_to_subspace",
    "is_invariant",
    "induced_action",
    "operator_generator",
]
