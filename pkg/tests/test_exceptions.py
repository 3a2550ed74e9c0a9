"""Tests for error handling and logging."""

import logging
import re

import pytest

from liepi import LiePI
from liepi.exceptions import (
    AlgebraMismatch,
    BudgetExceeded,
    CompatibilityViolation,
    ComputationRefusal,
    InputError,
    InternalInconsistency,
    LiePIError,
    MalformedInput,
    NonSplitComponent,
    RadicalNotNilpotent,
    wrap_unexpected,
)

from .example_algebras import load_algebra

UUID_PATTERN = r'\[([a-f0-9]{8}-[a-f0-9]{4}-[a-f0-9]{4}-[a-f0-9]{4}-[a-f0-9]{12})\]'


class TestExceptionClasses:
    """Test custom exception classes."""

    def test_liepi_error_basic(self):
        """Test basic LiePIError functionality."""
        error = LiePIError(
            message="Test error",
            error_code="TEST_ERROR",
            context={"algebra": "sl2"},
            suggestions=["Check the structure constants", "Run liepi check"],
        )

        assert error.message == "Test error"
        assert error.error_code == "TEST_ERROR"
        assert error.context["algebra"] == "sl2"
        assert len(error.suggestions) == 2
        assert error.correlation_id is not None
        assert error.exit_code == 1

    def test_error_to_dict(self):
        """Test error serialization to dict."""
        error = MalformedInput("Missing field 'dim'", path="algebra.json")

        error_dict = error.to_dict()
        assert error_dict["error"] == "MALFORMED_INPUT"
        assert error_dict["message"] == "Missing field 'dim'"
        assert error_dict["context"]["path"] == "algebra.json"
        assert error_dict["exit_code"] == 3
        assert error_dict["correlation_id"] == error.correlation_id

    def test_error_string_representation(self):
        """Test error string formatting."""
        error = CompatibilityViolation("g", "derivation", (0, 2))

        error_str = str(error)
        assert "[COMPATIBILITY_VIOLATION]" in error_str
        assert "g[a,b] = [ga,b] + [a,gb]" in error_str
        assert "(0, 2)" in error_str
        assert "Correlation ID:" in error_str

    def test_automorphism_law_in_message(self):
        """The violated law depends on the generator kind."""
        error = CompatibilityViolation("phi", "automorphism", (1, 3))
        assert "g[a,b] = [ga,gb]" in error.message
        assert error.context == {"generator": "phi", "kind": "automorphism", "pair": [1, 3]}

    def test_default_suggestions(self):
        """Some refusals explain how to proceed."""
        error = NonSplitComponent("component 0 has centroid dim 2")
        assert len(error.suggestions) == 2
        assert any("algebraically closed" in s for s in error.suggestions)
        assert "Suggestions:" in str(error)

    def test_default_suggestions_are_copied(self):
        """Mutating one error's suggestions leaves the class default alone."""
        first = BudgetExceeded("too big")
        first.suggestions.append("extra")
        assert BudgetExceeded("too big").suggestions == ["Lower --n or raise --budget explicitly"]

    def test_refusal_keywords_become_context(self):
        """Keyword arguments other than the base ones land in the context."""
        error = BudgetExceeded("Evaluation matrix too large", size=486, budget=10, ignored=None)
        assert error.context == {"size": 486, "budget": 10}

    def test_default_radical_message(self):
        """The nilpotent-radical refusal has a fixed message."""
        error = RadicalNotNilpotent()
        assert error.message == "formula requires R = N: solvable radical is not nilpotent"

    @pytest.mark.parametrize("error,code", [
        (MalformedInput("x"), 3),
        (AlgebraMismatch("sl2", "heisenberg"), 3),
        (RadicalNotNilpotent(), 1),
        (BudgetExceeded("x"), 1),
        (InternalInconsistency("x"), 1),
    ])
    def test_exit_codes(self, error, code):
        """Input errors exit with 3, everything else with 1."""
        assert error.exit_code == code
        assert isinstance(error, InputError) == (code == 3)

    def test_hierarchy(self):
        assert issubclass(RadicalNotNilpotent, ComputationRefusal)
        assert issubclass(ComputationRefusal, LiePIError)
        assert issubclass(InternalInconsistency, LiePIError)


class TestWrapUnexpected:
    """Test wrapping of foreign exceptions."""

    def test_liepi_error_passes_through(self):
        original = RadicalNotNilpotent()
        assert wrap_unexpected(original) is original

    def test_zero_division(self):
        wrapped = wrap_unexpected(ZeroDivisionError("division by zero"), operation="codim")
        assert isinstance(wrapped, InternalInconsistency)
        assert wrapped.message == "Division by zero during exact arithmetic"
        assert wrapped.context["operation"] == "codim"
        assert wrapped.context["original_error"] == "division by zero"

    def test_generic_error(self):
        wrapped = wrap_unexpected(ValueError("boom"), algebra="sl2")
        assert isinstance(wrapped, InternalInconsistency)
        assert wrapped.message == "Unexpected error: boom"
        assert wrapped.context["error_type"] == "ValueError"
        assert wrapped.context["algebra"] == "sl2"
        assert len(wrapped.suggestions) == 2


class TestLoggingIntegration:
    """Test logging functionality."""

    def test_operation_logging(self, caplog):
        """Starting and finishing an operation is logged."""
        with caplog.at_level(logging.DEBUG, logger="liepi"):
            server = LiePI(log_operations=True)
            server.piexp(load_algebra("sl2"))

        messages = [r.message for r in caplog.records]
        assert any("Starting piexp on sl2" in m for m in messages)
        assert any("piexp on sl2 completed in" in m for m in messages)

    def test_slow_operation_logging(self, caplog):
        """A zero threshold turns every operation into a slow one."""
        with caplog.at_level(logging.WARNING, logger="liepi"):
            server = LiePI(log_slow_operations=True, slow_operation_ms=0)
            server.piexp(load_algebra("bahturin_m2"))

        slow_logs = [r for r in caplog.records if "Slow operation detected" in r.message]
        assert len(slow_logs) == 1
        assert slow_logs[0].levelno == logging.WARNING

    def test_correlation_ids_in_logs(self, caplog):
        """Log lines carry the operation's correlation id."""
        with caplog.at_level(logging.INFO, logger="liepi"):
            LiePI().codim(load_algebra("heisenberg"), 2)

        assert any(re.search(UUID_PATTERN, r.message) for r in caplog.records)

    def test_unexpected_error_is_wrapped_and_logged(self, caplog):
        """Foreign exceptions become internal inconsistencies."""
        server = LiePI()
        algebra = load_algebra("sl2")

        def broken():
            raise ValueError("boom")

        with caplog.at_level(logging.ERROR, logger="liepi"):
            with pytest.raises(InternalInconsistency) as exc_info:
                server._run("validate", algebra, broken)

        assert exc_info.value.context["operation"] == "validate"
        assert exc_info.value.context["algebra"] == "sl2"
        assert isinstance(exc_info.value.__cause__, ValueError)
        assert any("validate failed after" in r.message for r in caplog.records)
        assert server.get_stats()["metrics"]["summary"]["total_errors"] == 1


class TestPerformanceTracking:
    """Test performance tracking functionality."""

    def test_operation_statistics(self):
        """Test operation execution statistics."""
        server = LiePI()
        server.reset_stats()
        assert server.get_stats()["operation_count"] == 0

        algebra = load_algebra("heisenberg")
        for n in range(1, 6):
            server.codim(algebra, n)

        stats = server.get_stats()
        assert stats["operation_count"] == 5
        assert stats["total_operation_time_ms"] > 0
        assert stats["average_operation_time_ms"] > 0

    def test_stats_reset(self):
        """Test statistics reset functionality."""
        server = LiePI()
        server._operation_count = 10
        server._total_operation_time = 1000.0

        server.reset_stats()
        stats = server.get_stats()

        assert stats["operation_count"] == 0
        assert stats["total_operation_time_ms"] == 0.0
