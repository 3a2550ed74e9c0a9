"""Brute-force codimensions and cocharacters."""

from .cocharacter import (
    CocharacterReport,
    cocharacter_multiplicities,
    permutation_trace,
    vanishing_violations,
)
from .evaluation import (
    DEFAULT_BUDGET,
    EXACT,
    TWO_PRIME,
    CodimResult,
    EvaluationSpace,
    check_budget,
    codimension,
    evaluation_basis,
    evaluation_size,
    literal_evaluation_rows,
)
from .growth import GrowthReport, GrowthRow, growth_report, nth_root
from .partitions import (
    Partition,
    class_size,
    hook_dim,
    mn_character,
    partitions,
    representative,
)

__all__ = [
    "CocharacterReport",
    "cocharacter_multiplicities",
    "permutation_trace",
    "vanishing_violations",
    "DEFAULT_BUDGET",
    "EXACT",
    "TWO_PRIME",
    "CodimResult",
    "EvaluationSpace",
    "check_budget",
    "codimension",
    "evaluation_basis",
    "evaluation_size",
    "literal_evaluation_rows",
    "GrowthReport",
    "GrowthRow",
    "growth_report",
    "nth_root",
    "Partition",
    "class_size",
    "hook_dim",
    "mn_character",
    "partitions",
    "representative",
]
