"""Metrics collection for liepi operations."""

import time
import threading
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Any
from datetime import datetime
import statistics


OPERATION_TYPES = (
    'validate', 'radical', 'levi', 'simples', 'piexp',
    'certify', 'codim', 'cochar', 'growth', 'compare',
)


@dataclass
class OperationMetrics:
    """Metrics for a single facade operation."""

    operation_id: str
    operation_type: str
    algebra_name: Optional[str]
    start_time: float
    end_time: Optional[float] = None
    duration_ms: Optional[float] = None
    n: Optional[int] = None
    mode: str = 'exact'
    result_size: Optional[int] = None
    fallbacks: int = 0
    error: Optional[str] = None
    context: Dict[str, Any] = field(default_factory=dict)

    def complete(self, result_size: Optional[int] = None, error: Optional[str] = None):
        """Mark operation as complete and calculate duration."""
        self.end_time = time.time()
        self.duration_ms = (self.end_time - self.start_time) * 1000
        self.result_size = result_size
        self.error = error


class MetricsCollector:
    """Collects and aggregates metrics for liepi operations."""

    def __init__(self, max_history: int = 1000):
        """
        Initialize metrics collector.

        Args:
            max_history: Maximum number of operations to keep in history
        """
        self.max_history = max_history
        self._operations: List[OperationMetrics] = []
        self._lock = threading.Lock()

        self._total_operations = 0
        self._total_errors = 0
        self._total_fallbacks = 0

        self._algebra_operations: Dict[str, int] = {}
        self._algebra_errors: Dict[str, int] = {}
        self._operation_counts: Dict[str, int] = {op: 0 for op in OPERATION_TYPES}

    def start_operation(self,
                        operation_id: str,
                        operation_type: str,
                        algebra_name: Optional[str] = None,
                        n: Optional[int] = None,
                        mode: str = 'exact',
                        context: Optional[Dict[str, Any]] = None) -> OperationMetrics:
        """Start tracking a new operation."""
        metrics = OperationMetrics(
            operation_id=operation_id,
            operation_type=operation_type,
            algebra_name=algebra_name,
            start_time=time.time(),
            n=n,
            mode=mode,
            context=context or {}
        )

        with self._lock:
            self._operations.append(metrics)
            self._total_operations += 1
            self._operation_counts[operation_type] = self._operation_counts.get(operation_type, 0) + 1

            if algebra_name:
                self._algebra_operations[algebra_name] = self._algebra_operations.get(algebra_name, 0) + 1

            if len(self._operations) > self.max_history:
                self._operations = self._operations[-self.max_history:]

        return metrics

    def complete_operation(self,
                           metrics: OperationMetrics,
                           result_size: Optional[int] = None,
                           error: Optional[str] = None):
        """Complete tracking for an operation."""
        metrics.complete(result_size=result_size, error=error)

        with self._lock:
            if error:
                self._total_errors += 1
                if metrics.algebra_name:
                    self._algebra_errors[metrics.algebra_name] = \
                        self._algebra_errors.get(metrics.algebra_name, 0) + 1
            self._total_fallbacks += metrics.fallbacks

    def record_fallback(self, metrics: OperationMetrics):
        """Record an exact recomputation after modular ranks disagreed."""
        with self._lock:
            metrics.fallbacks += 1

    def get_stats(self) -> Dict[str, Any]:
        """Get aggregated statistics."""
        with self._lock:
            completed = [op for op in self._operations if op.duration_ms is not None]
            failed = [op for op in completed if op.error is not None]
            successful = [op for op in completed if op.error is None]

            durations = [op.duration_ms for op in successful]
            duration_stats = {}
            if durations:
                duration_stats = {
                    'min': min(durations),
                    'max': max(durations),
                    'mean': statistics.mean(durations),
                    'median': statistics.median(durations),
                    'p95': statistics.quantiles(durations, n=20)[18] if len(durations) > 1 else durations[0],
                }

            return {
                'summary': {
                    'total_operations': self._total_operations,
                    'total_errors': self._total_errors,
                    'error_rate': self._total_errors / self._total_operations if self._total_operations > 0 else 0,
                    'modular_fallbacks': self._total_fallbacks,
                },
                'operations': dict(self._operation_counts),
                'modes': {
                    mode: sum(1 for op in completed if op.n is not None and op.mode == mode)
                    for mode in ('exact', 'two_prime')
                },
                'algebras': {
                    'operations': dict(self._algebra_operations),
                    'errors': dict(self._algebra_errors)
                },
                'durations_ms': duration_stats,
                'recent_errors': [
                    {
                        'operation_id': op.operation_id,
                        'operation': op.operation_type,
                        'algebra': op.algebra_name,
                        'error': op.error,
                        'duration_ms': op.duration_ms,
                        'timestamp': datetime.fromtimestamp(op.start_time).isoformat()
                    }
                    for op in failed[-10:]
                ],
                'slow_operations': [
                    {
                        'operation_id': op.operation_id,
                        'operation': op.operation_type,
                        'algebra': op.algebra_name,
                        'n': op.n,
                        'duration_ms': op.duration_ms,
                        'result_size': op.result_size,
                        'timestamp': datetime.fromtimestamp(op.start_time).isoformat()
                    }
                    for op in sorted(successful, key=lambda x: x.duration_ms, reverse=True)[:10]
                ]
            }

    def get_operation_history(self,
                              limit: int = 100,
                              algebra_name: Optional[str] = None,
                              operation_type: Optional[str] = None,
                              include_errors: bool = True) -> List[Dict[str, Any]]:
        """Get recent operation history with optional filters."""
        with self._lock:
            operations = self._operations[-limit:]

            if algebra_name:
                operations = [op for op in operations if op.algebra_name == algebra_name]

            if operation_type:
                operations = [op for op in operations if op.operation_type == operation_type]

            if not include_errors:
                operations = [op for op in operations if op.error is None]

            return [
                {
                    'operation_id': op.operation_id,
                    'operation': op.operation_type,
                    'algebra': op.algebra_name,
                    'n': op.n,
                    'mode': op.mode,
                    'duration_ms': op.duration_ms,
                    'result_size': op.result_size,
                    'fallbacks': op.fallbacks,
                    'error': op.error,
                    'timestamp': datetime.fromtimestamp(op.start_time).isoformat(),
                }
                for op in operations
            ]

    def reset_stats(self):
        """Reset all statistics."""
        with self._lock:
            self._operations.clear()
            self._total_operations = 0
            self._total_errors = 0
            self._total_fallbacks = 0
            self._algebra_operations.clear()
            self._algebra_errors.clear()
            self._operation_counts = {op: 0 for op in OPERATION_TYPES}
