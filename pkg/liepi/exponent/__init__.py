"""PI-exponent formulas: the automatic R = N case and certificate checking."""

from .certificate import (
    Certificate,
    CertificatePair,
    annihilator,
    canonical_certificate,
    certify_dprime,
    condition_one,
)
from .reach import ReachSet, left_normed_subspaces, reach_set, search_chain
from .automatic import (
    EXPONENT,
    NILPOTENT,
    ComponentData,
    ExponentResult,
    h_components,
    ordered_tuples,
    nilpotent_radical_exponent,
)

__all__ = [
    "Certificate",
    "CertificatePair",
    "annihilator",
    "canonical_certificate",
    "certify_dprime",
    "condition_one",
    "ReachSet",
    "left_normed_subspaces",
    "reach_set",
    "search_chain",
    "EXPONENT",
    "NILPOTENT",
    "ComponentData",
    "ExponentResult",
    "h_components",
    "ordered_tuples",
    "nilpotent_radical_exponent",
]
