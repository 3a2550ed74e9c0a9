"""Console and JSON renderings of the metrics collector."""

import json
from abc import ABC, abstractmethod
from datetime import datetime
from typing import Any, Dict, List

from .collector import MetricsCollector

FAMILIES = {
    'structure': ('validate', 'radical', 'levi', 'simples'),
    'exponent': ('piexp', 'certify', 'compare'),
    'codimension': ('codim', 'cochar', 'growth'),
}


def _clip(text: str, width: int = 60) -> str:
    return text if len(text) <= width else text[:width - 3] + "..."


class MetricsReporter(ABC):
    """Base class for metrics reporters."""

    def __init__(self, collector: MetricsCollector):
        self.collector = collector

    @abstractmethod
    def report(self) -> str:
        """Render the collector's current statistics."""


class ConsoleReporter(MetricsReporter):
    """Plain-text report for stderr."""

    def report(self, include_details: bool = True) -> str:
        stats = self.collector.get_stats()
        summary = stats['summary']

        sections = [
            ["=== liepi Metrics Report ===", f"Generated at: {datetime.now().isoformat()}"],
            self._summary(summary),
            self._performance(stats['durations_ms']),
            self._operations(stats['operations'], stats['modes']),
        ]
        if include_details:
            sections.extend([
                self._algebras(stats['algebras']),
                self._slowest(stats['slow_operations']),
                self._errors(stats['recent_errors']),
            ])
        return "\n\n".join("\n".join(lines) for lines in sections if lines)

    @staticmethod
    def _summary(summary: Dict[str, Any]) -> List[str]:
        return [
            "📊 Summary:",
            f"  Total Operations: {summary['total_operations']}",
            f"  Total Errors: {summary['total_errors']} ({summary['error_rate']:.1%} error rate)",
            f"  Modular Fallbacks: {summary['modular_fallbacks']}",
        ]

    @staticmethod
    def _performance(durations: Dict[str, float]) -> List[str]:
        if not durations:
            return ["⚡ Performance:", "  No completed operations"]
        return ["⚡ Performance:"] + [
            f"  {label}: {durations[key]:.2f}ms"
            for label, key in (("Min", 'min'), ("Median", 'median'), ("Mean", 'mean'),
                               ("P95", 'p95'), ("Max", 'max'))
        ]

    @staticmethod
    def _operations(counts: Dict[str, int], modes: Dict[str, int]) -> List[str]:
        lines = ["📈 Operations:"]
        for family, members in FAMILIES.items():
            used = [f"{op} {counts[op]}" for op in members if counts.get(op)]
            if used:
                lines.append(f"  {family}: {', '.join(used)}")
        if any(modes.values()):
            lines.append(f"  rank modes: exact {modes['exact']}, two-prime {modes['two_prime']}")
        return lines

    @staticmethod
    def _algebras(algebras: Dict[str, Dict[str, int]]) -> List[str]:
        if not algebras['operations']:
            return []
        busiest = sorted(algebras['operations'].items(), key=lambda item: (-item[1], item[0]))
        return ["🔍 Algebra Activity:"] + [
            f"  {name}: {count} operations, {algebras['errors'].get(name, 0)} errors"
            for name, count in busiest[:10]
        ]

    @staticmethod
    def _slowest(slow: List[Dict[str, Any]]) -> List[str]:
        if not slow:
            return []
        lines = ["🐌 Slowest Operations:"]
        for op in slow[:5]:
            at_n = f" (n = {op['n']})" if op['n'] is not None else ""
            lines.append(f"  {op['operation']} on {op['algebra']}{at_n}: {op['duration_ms']:.2f}ms")
        return lines

    @staticmethod
    def _errors(errors: List[Dict[str, Any]]) -> List[str]:
        if not errors:
            return []
        return ["❌ Recent Errors:"] + [
            f"  {e['algebra']}: {_clip(e['error'])}" for e in errors[-5:]
        ]


class JSONReporter(MetricsReporter):
    """Machine-readable report; keys are sorted like the CLI's --json output."""

    def report(self, pretty: bool = True) -> str:
        payload = {
            'timestamp': datetime.now().isoformat(),
            'version': '1.0',
            'metrics': self.collector.get_stats(),
        }
        return json.dumps(payload, indent=2 if pretty else None, sort_keys=True)
