"""Metrics and monitoring for liepi."""

from .collector import MetricsCollector, OperationMetrics, OPERATION_TYPES
from .reporters import ConsoleReporter, JSONReporter, MetricsReporter

__all__ = [
    'MetricsCollector',
    'OperationMetrics',
    'OPERATION_TYPES',
    'ConsoleReporter',
    'JSONReporter',
    'MetricsReporter',
]
