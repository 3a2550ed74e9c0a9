"""Structural decompositions: radical, Levi subalgebra, simple components, A0."""

from .radical import RadicalData, solvable_radical, quotient_algebra, quotient_with_map
from .levi import LeviData, levi_subalgebra, verify_levi, exp_ad, perturb_levi
from .semisimple import (
    SemisimpleDecomposition,
    simple_decomposition,
    h_simple_grouping,
    group_sum,
    centroid,
    is_semisimple,
    minimal_polynomial,
    rational_roots,
)
from .associative import (
    A0Data,
    wedderburn_split,
    complete_reducibility_check,
    unital_envelope_dim,
    semisimple_part_is_split,
)
from .retry import with_seed_retries, UnluckySeed

__all__ = [
    "RadicalData",
    "solvable_radical",
    "quotient_algebra",
    "quotient_with_map",
    "LeviData",
    "levi_subalgebra",
    "verify_levi",
    "exp_ad",
    "perturb_levi",
    "SemisimpleDecomposition",
    "simple_decomposition",
    "h_simple_grouping",
    "group_sum",
    "centroid",
    "is_semisimple",
    "minimal_polynomial",
    "rational_roots",
    "A0Data",
    "wedderburn_split",
    "complete_reducibility_check",
    "unital_envelope_dim",
    "semisimple_part_is_split",
    "with_seed_retries",
    "UnluckySeed",
]
