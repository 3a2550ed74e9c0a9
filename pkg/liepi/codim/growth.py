"""Observed codimension growth next to the structural exponent."""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from sympy import Integer, Rational as SympyRational

from ..action import ActionAlgebra
from ..exceptions import ComputationRefusal
from ..exponent import nilpotent_radical_exponent
from ..lie import LieAlgebra
from .evaluation import DEFAULT_BUDGET, codimension

logger = logging.getLogger(__name__)


@dataclass
class GrowthRow:
    n: int
    codim: int
    root: str

    def to_dict(self) -> Dict:
        return {"n": self.n, "codim": self.codim, "root": self.root}


@dataclass
class GrowthReport:
    rows: List[GrowthRow] = field(default_factory=list)
    d: Optional[int] = None
    d_unavailable: Optional[str] = None

    def to_dict(self) -> Dict:
        return {
            "d": self.d,
            "d_unavailable": self.d_unavailable,
            "rows": [r.to_dict() for r in self.rows],
        }


def nth_root(value: int, n: int, digits: int = 6) -> str:
    if value == 0:
        return "0"
    return str((Integer(value) ** SympyRational(1, n)).evalf(digits))


def growth_report(
    algebra: LieAlgebra,
    action: ActionAlgebra,
    n_max: int,
    exact: bool = True,
    budget: int = DEFAULT_BUDGET,
    max_workers: int = 1,
) -> GrowthReport:
    """
    Rows (n, c_n, c_n^(1/n)) for n = 1..n_max with d when the formula applies.

    Purely observational: nothing about the asymptotics is asserted.
    """
    report = GrowthReport()
    try:
        report.d = nilpotent_radical_exponent(algebra, action).d
    except ComputationRefusal as e:
        report.d_unavailable = e.message
        logger.debug(f"No structural d for {algebra.name}: {e.message}")

    for n in range(1, n_max + 1):
        value = codimension(algebra, action, n, exact=exact, budget=budget, max_workers=max_workers).value
        report.rows.append(GrowthRow(n=n, codim=value, root=nth_root(value, n)))
    return report
