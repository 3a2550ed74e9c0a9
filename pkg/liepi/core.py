"""Core liepi facade."""

from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional
import logging
import threading
import time
import uuid

from .action import ActionAlgebra, induced_action, trivial_action
from .codim import (
    DEFAULT_BUDGET,
    EXACT,
    TWO_PRIME,
    CocharacterReport,
    CodimResult,
    GrowthReport,
    cocharacter_multiplicities,
    codimension,
    growth_report,
)
from .exceptions import InternalInconsistency, LiePIError, wrap_unexpected
from .exponent import Certificate, ExponentResult, certify_dprime, nilpotent_radical_exponent
from .lie import LieAlgebra, ValidationReport, validate_algebra
from .metrics import MetricsCollector
from .structure import (
    LeviData,
    RadicalData,
    SemisimpleDecomposition,
    h_simple_grouping,
    levi_subalgebra,
    quotient_with_map,
    simple_decomposition,
    solvable_radical,
)

logger = logging.getLogger(__name__)


@dataclass
class SimplesReport:
    """Simple components of L/R and, under an action, their H-simple groups."""

    decomposition: SemisimpleDecomposition
    groups: List[List[int]]

    def to_dict(self) -> Dict[str, Any]:
        data = self.decomposition.to_dict()
        data["groups"] = self.groups
        return data


@dataclass
class CompareReport:
    """The exponent with and without the action, next to c_n and c_n^H."""

    d_action: ExponentResult
    d_trivial: ExponentResult
    codim_trivial: CodimResult
    codim_action: CodimResult

    @property
    def exponents_equal(self) -> bool:
        return self.d_action.d == self.d_trivial.d

    def to_dict(self) -> Dict[str, Any]:
        return {
            "d_action": self.d_action.d,
            "d_trivial": self.d_trivial.d,
            "exponents_equal": self.exponents_equal,
            "n": self.codim_trivial.n,
            "codim_trivial": self.codim_trivial.value,
            "codim_action": self.codim_action.value,
        }


class LiePI:
    """Main liepi class: PI-exponents and codimensions of Lie algebras with an action."""

    def __init__(self,
                 exact: bool = True,
                 budget: int = DEFAULT_BUDGET,
                 max_workers: int = 4,
                 log_operations: bool = False,
                 log_slow_operations: bool = True,
                 slow_operation_ms: int = 5000,
                 enable_metrics: bool = True,
                 metrics_history_size: int = 1000):
        """
        Initialize liepi.

        Args:
            exact: Exact ranks; False selects the two-prime modular mode
            budget: Ceiling on n! * (dim A)^n * (dim L)^(n+1) for codimensions
            max_workers: Worker threads for evaluation row-block construction
            log_operations: Whether to log every operation at DEBUG level
            log_slow_operations: Whether to log slow operations at WARNING level
            slow_operation_ms: Threshold in milliseconds for slow operation logging
            enable_metrics: Whether to enable metrics collection
            metrics_history_size: Maximum number of operations kept in metrics history
        """
        self.exact = exact
        self.budget = budget
        self.max_workers = max_workers
        self.log_operations = log_operations
        self.log_slow_operations = log_slow_operations
        self.slow_operation_ms = slow_operation_ms

        self._operation_count = 0
        self._total_operation_time = 0.0
        self._lock = threading.Lock()

        self.metrics_collector = None
        if enable_metrics:
            self.metrics_collector = MetricsCollector(max_history=metrics_history_size)

    @property
    def mode(self) -> str:
        return EXACT if self.exact else TWO_PRIME

    def _run(self,
             operation: str,
             algebra: LieAlgebra,
             func: Callable[[], Any],
             n: Optional[int] = None,
             size: Optional[Callable[[Any], Optional[int]]] = None) -> Any:
        """Time an operation, record metrics and wrap foreign errors."""
        correlation_id = str(uuid.uuid4())
        operation_metrics = None
        if self.metrics_collector:
            operation_metrics = self.metrics_collector.start_operation(
                operation_id=correlation_id,
                operation_type=operation,
                algebra_name=algebra.name,
                n=n,
                mode=self.mode,
            )

        if self.log_operations:
            logger.debug(f"[{correlation_id}] Starting {operation} on {algebra.name}"
                         f"{f' (n = {n})' if n is not None else ''}")

        start_time = time.time()
        try:
            result = func()
        except Exception as e:
            elapsed = (time.time() - start_time) * 1000
            error = wrap_unexpected(e, operation=operation, algebra=algebra.name)
            if operation_metrics:
                self.metrics_collector.complete_operation(operation_metrics, error=error.message)
            if isinstance(e, LiePIError):
                logger.debug(f"[{correlation_id}] {operation} refused after {elapsed:.2f}ms: {error.message}")
                raise
            logger.error(f"[{correlation_id}] {operation} failed after {elapsed:.2f}ms: {e}")
            raise error from e

        elapsed = (time.time() - start_time) * 1000
        with self._lock:
            self._operation_count += 1
            self._total_operation_time += elapsed

        if operation_metrics:
            if getattr(result, "fallback", False):
                self.metrics_collector.record_fallback(operation_metrics)
            self.metrics_collector.complete_operation(
                operation_metrics, result_size=size(result) if size else None
            )

        if self.log_slow_operations and elapsed > self.slow_operation_ms:
            logger.warning(f"[{correlation_id}] Slow operation detected: {operation} on "
                           f"{algebra.name} took {elapsed:.2f}ms")
        else:
            logger.info(f"[{correlation_id}] {operation} on {algebra.name} completed in {elapsed:.2f}ms")
        return result

    # ------------------------------------------------------------------
    # Structure
    # ------------------------------------------------------------------

    def validate(self, algebra: LieAlgebra) -> ValidationReport:
        return self._run("validate", algebra, lambda: validate_algebra(algebra),
                         size=lambda r: len(r.antisymmetry_violations) + len(r.jacobi_violations))

    def radical(self, algebra: LieAlgebra) -> RadicalData:
        return self._run("radical", algebra, lambda: solvable_radical(algebra),
                         size=lambda r: r.R.dim)

    def levi(self, algebra: LieAlgebra) -> LeviData:
        return self._run("levi", algebra,
                         lambda: levi_subalgebra(algebra, solvable_radical(algebra)),
                         size=lambda r: r.B.dim)

    def simples(self, algebra: LieAlgebra, action: Optional[ActionAlgebra] = None) -> SimplesReport:
        def compute() -> SimplesReport:
            radical = solvable_radical(algebra)
            quotient_alg, quotient = quotient_with_map(algebra, radical.R)
            decomposition = simple_decomposition(quotient_alg)
            if action is None:
                groups = [[i] for i in range(len(decomposition.components))]
            else:
                groups = h_simple_grouping(decomposition, induced_action(action, quotient, quotient_alg))
            return SimplesReport(decomposition=decomposition, groups=groups)

        return self._run("simples", algebra, compute, size=lambda r: len(r.groups))

    # ------------------------------------------------------------------
    # Exponents
    # ------------------------------------------------------------------

    def piexp(self, algebra: LieAlgebra, action: Optional[ActionAlgebra] = None) -> ExponentResult:
        action = action or trivial_action(algebra)
        return self._run("piexp", algebra, lambda: nilpotent_radical_exponent(algebra, action),
                         size=lambda r: r.d)

    def certify(self, algebra: LieAlgebra, certificate: Certificate,
                action: Optional[ActionAlgebra] = None) -> int:
        action = action or trivial_action(algebra)
        return self._run("certify", algebra, lambda: certify_dprime(algebra, action, certificate),
                         size=lambda r: r)

    # ------------------------------------------------------------------
    # Codimensions
    # ------------------------------------------------------------------

    def codim(self, algebra: LieAlgebra, n: int, action: Optional[ActionAlgebra] = None) -> CodimResult:
        action = action or trivial_action(algebra)
        return self._run(
            "codim", algebra,
            lambda: codimension(algebra, action, n, exact=self.exact, budget=self.budget,
                                max_workers=self.max_workers),
            n=n, size=lambda r: r.value,
        )

    def cochar(self, algebra: LieAlgebra, n: int, action: Optional[ActionAlgebra] = None) -> CocharacterReport:
        action = action or trivial_action(algebra)
        return self._run(
            "cochar", algebra,
            lambda: cocharacter_multiplicities(algebra, action, n, budget=self.budget,
                                               max_workers=self.max_workers),
            n=n, size=lambda r: r.codim,
        )

    def growth(self, algebra: LieAlgebra, n_max: int, action: Optional[ActionAlgebra] = None) -> GrowthReport:
        action = action or trivial_action(algebra)
        return self._run(
            "growth", algebra,
            lambda: growth_report(algebra, action, n_max, exact=self.exact, budget=self.budget,
                                  max_workers=self.max_workers),
            n=n_max, size=lambda r: len(r.rows),
        )

    def compare(self, algebra: LieAlgebra, action: ActionAlgebra, n: int) -> CompareReport:
        """
        Exponents with and without the action, plus c_n <= c_n^H.

        A violated inequality is an internal inconsistency.
        """
        def compute() -> CompareReport:
            trivial = trivial_action(algebra)
            report = CompareReport(
                d_action=nilpotent_radical_exponent(algebra, action),
                d_trivial=nilpotent_radical_exponent(algebra, trivial),
                codim_trivial=codimension(algebra, trivial, n, exact=self.exact,
                                          budget=self.budget, max_workers=self.max_workers),
                codim_action=codimension(algebra, action, n, exact=self.exact,
                                         budget=self.budget, max_workers=self.max_workers),
            )
            if report.codim_trivial.value > report.codim_action.value:
                raise InternalInconsistency(
                    "Ordinary codimension exceeds the codimension with the action",
                    n=n, codim=report.codim_trivial.value, codim_action=report.codim_action.value,
                )
            return report

        return self._run("compare", algebra, compute, n=n, size=lambda r: r.d_action.d)

    # ------------------------------------------------------------------
    # Stats
    # ------------------------------------------------------------------

    def get_stats(self) -> Dict[str, Any]:
        """Get operation statistics."""
        with self._lock:
            average = self._total_operation_time / self._operation_count if self._operation_count else 0
            stats: Dict[str, Any] = {
                "operation_count": self._operation_count,
                "total_operation_time_ms": self._total_operation_time,
                "average_operation_time_ms": average,
                "mode": self.mode,
                "budget": self.budget,
                "max_workers": self.max_workers,
                "slow_operation_threshold_ms": self.slow_operation_ms,
            }

        if self.metrics_collector:
            stats['metrics'] = self.metrics_collector.get_stats()

        return stats

    def reset_stats(self) -> None:
        """Reset operation statistics."""
        with self._lock:
            self._operation_count = 0
            self._total_operation_time = 0.0

        if self.metrics_collector:
            self.metrics_collector.reset_stats()

    def get_metrics_report(self, format: str = 'console') -> str:
        """Get a formatted metrics report.

        Args:
            format: Report format ('console' or 'json')

        Returns:
            Formatted metrics report string
        """
        if not self.metrics_collector:
            return "Metrics collection is disabled"

        from .metrics import ConsoleReporter, JSONReporter

        reporters = {
            'console': ConsoleReporter,
            'json': JSONReporter,
        }

        reporter_class = reporters.get(format, ConsoleReporter)
        reporter = reporter_class(self.metrics_collector)
        return reporter.report()
