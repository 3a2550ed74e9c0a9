"""liepi - PI-exponents and codimensions of Lie algebras with derivation/automorphism actions."""

from .core import LiePI
from .lie import LieAlgebra
from .action import ActionAlgebra, ActionGenerator, build_action_algebra, trivial_action
from .exponent import Certificate, CertificatePair, certify_dprime, nilpotent_radical_exponent
from .codim import codimension, cocharacter_multiplicities

__version__ = "0.1.0"
__all__ = [
    "LiePI",
    "LieAlgebra",
    "ActionAlgebra",
    "ActionGenerator",
    "build_action_algebra",
    "trivial_action",
    "Certificate",
    "CertificatePair",
    "certify_dprime",
    "nilpotent_radical_exponent",
    "codimension",
    "cocharacter_multiplicities",
]
