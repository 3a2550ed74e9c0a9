"""Custom exceptions for liepi with enhanced error messages."""

from typing import Optional, Dict, Any, List, Sequence
import uuid


class LiePIError(Exception):
    """Base exception for all liepi errors."""

    exit_code = 1
    default_code = "LIEPI_ERROR"
    default_suggestions: List[str] = []

    def __init__(
        self,
        message: str,
        error_code: Optional[str] = None,
        context: Optional[Dict[str, Any]] = None,
        suggestions: Optional[List[str]] = None,
        correlation_id: Optional[str] = None
    ):
        """
        Initialize a liepi error with rich context.

        Args:
            message: The error message
            error_code: Optional error code for categorization
            context: Additional context about the error
            suggestions: List of suggestions to fix the error
            correlation_id: ID to track this error across logs
        """
        super().__init__(message)
        self.message = message
        self.error_code = error_code or self.default_code
        self.context = context or {}
        self.suggestions = suggestions or list(self.default_suggestions)
        self.correlation_id = correlation_id or str(uuid.uuid4())

    def to_dict(self) -> Dict[str, Any]:
        """Convert error to dictionary for JSON serialization."""
        return {
            "error": self.error_code,
            "message": self.message,
            "context": self.context,
            "suggestions": self.suggestions,
            "correlation_id": self.correlation_id,
            "exit_code": self.exit_code,
        }

    def __str__(self) -> str:
        """Return formatted error message."""
        parts = [f"[{self.error_code}] {self.message}"]

        if self.context:
            parts.append(f"Context: {self.context}")

        if self.suggestions:
            parts.append("Suggestions:")
            for i, suggestion in enumerate(self.suggestions, 1):
                parts.append(f"  {i}. {suggestion}")

        parts.append(f"Correlation ID: {self.correlation_id}")

        return "\n".join(parts)


# ---------------------------------------------------------------------------
# Input errors (exit code 3)
# ---------------------------------------------------------------------------


class InputError(LiePIError):
    """The supplied algebra, action or certificate data is unusable."""

    exit_code = 3
    default_code = "INPUT_ERROR"


class MalformedInput(InputError):
    """A file could not be parsed into the expected document shape."""

    default_code = "MALFORMED_INPUT"

    def __init__(self, message: str, path: Optional[str] = None, **kwargs):
        context = kwargs.pop("context", {})
        if path:
            context["path"] = path
        super().__init__(message=message, context=context, **kwargs)


class IndexOutOfRange(InputError):
    """A basis index lies outside 0..dim-1."""

    default_code = "INDEX_OUT_OF_RANGE"

    def __init__(self, message: str, index: Optional[int] = None, dim: Optional[int] = None, **kwargs):
        context = kwargs.pop("context", {})
        if index is not None:
            context["index"] = index
        if dim is not None:
            context["dim"] = dim
        super().__init__(message=message, context=context, **kwargs)


class ZeroDenominator(InputError):
    """A rational literal has denominator zero."""

    default_code = "ZERO_DENOMINATOR"

    def __init__(self, literal: str, **kwargs):
        context = kwargs.pop("context", {})
        context["literal"] = literal
        super().__init__(
            message=f"Rational literal '{literal}' has a zero denominator",
            context=context,
            **kwargs
        )


class DimensionMismatch(InputError):
    """Two objects that must share an ambient dimension do not."""

    default_code = "DIMENSION_MISMATCH"

    def __init__(self, message: str, expected: Optional[int] = None, actual: Optional[int] = None, **kwargs):
        context = kwargs.pop("context", {})
        if expected is not None:
            context["expected"] = expected
        if actual is not None:
            context["actual"] = actual
        super().__init__(message=message, context=context, **kwargs)


class AlgebraValidationError(InputError):
    """Structure constants violate antisymmetry or the Jacobi identity."""

    default_code = "VALIDATION_FAILED"
    default_suggestions = [
        "Check the sign convention: only pairs i < j are listed and [e_j, e_i] = -[e_i, e_j]",
        "Run 'liepi check <algebra>' to list every violated basis triple",
    ]

    def __init__(self, message: str, violations: Optional[Sequence[Any]] = None, **kwargs):
        context = kwargs.pop("context", {})
        if violations:
            context["violations"] = [str(v) for v in list(violations)[:10]]
            context["violation_count"] = len(violations)
        super().__init__(message=message, context=context, **kwargs)


class AlgebraMismatch(InputError):
    """An action or certificate file names a different algebra."""

    default_code = "ALGEBRA_MISMATCH"

    def __init__(self, expected: str, actual: str, **kwargs):
        context = kwargs.pop("context", {})
        context.update({"expected": expected, "actual": actual})
        super().__init__(
            message=f"File refers to algebra '{actual}' but '{expected}' was loaded",
            context=context,
            **kwargs
        )


class CompatibilityViolation(InputError):
    """A generator breaks the derivation or automorphism law on a basis pair."""

    default_code = "COMPATIBILITY_VIOLATION"

    def __init__(self, generator: str, kind: str, pair: Sequence[int], **kwargs):
        context = kwargs.pop("context", {})
        context.update({"generator": generator, "kind": kind, "pair": list(pair)})
        law = "g[a,b] = [ga,b] + [a,gb]" if kind == "derivation" else "g[a,b] = [ga,gb]"
        super().__init__(
            message=(
                f"Generator '{generator}' ({kind}) violates {law} "
                f"on basis pair ({pair[0]}, {pair[1]})"
            ),
            context=context,
            **kwargs
        )


class SingularAutomorphism(InputError):
    """An automorphism generator is not invertible."""

    default_code = "SINGULAR_AUTOMORPHISM"

    def __init__(self, generator: str, **kwargs):
        context = kwargs.pop("context", {})
        context["generator"] = generator
        super().__init__(
            message=f"Automorphism generator '{generator}' is singular",
            context=context,
            **kwargs
        )


# ---------------------------------------------------------------------------
# Computational refusals (exit code 1)
# ---------------------------------------------------------------------------


class ComputationRefusal(LiePIError):
    """Input is valid but outside the hypotheses of the requested formula."""

    exit_code = 1
    default_code = "REFUSED"

    def __init__(self, message: str, **kwargs):
        context = kwargs.pop("context", {})
        for key in list(kwargs):
            if key not in ("error_code", "suggestions", "correlation_id"):
                value = kwargs.pop(key)
                if value is not None:
                    context[key] = value
        super().__init__(message=message, context=context, **kwargs)


class NotASubalgebra(ComputationRefusal):
    default_code = "NOT_A_SUBALGEBRA"


class NotAnIdeal(ComputationRefusal):
    default_code = "NOT_AN_IDEAL"


class NotIdeals(ComputationRefusal):
    default_code = "NOT_IDEALS"


class NotNested(ComputationRefusal):
    default_code = "NOT_NESTED"


class RadicalNotNilpotent(ComputationRefusal):
    """The automatic exponent needs the solvable radical to be nilpotent."""

    default_code = "RADICAL_NOT_NILPOTENT"
    default_suggestions = [
        "Supply a Levi subalgebra B and an S in a certificate and use 'liepi certify'",
    ]

    def __init__(self, message: str = "formula requires R = N: solvable radical is not nilpotent", **kwargs):
        super().__init__(message, **kwargs)


class RadicalNotInvariant(ComputationRefusal):
    default_code = "RADICAL_NOT_INVARIANT"

    def __init__(self, message: str = "formula requires N to be an H-submodule: radical is not invariant under the action", **kwargs):
        super().__init__(message, **kwargs)


class NotSemisimple(ComputationRefusal):
    default_code = "NOT_SEMISIMPLE"


class NonSplitComponent(ComputationRefusal):
    """A simple component is not absolutely simple over the rationals."""

    default_code = "NON_SPLIT_COMPONENT"
    default_suggestions = [
        "The exponent formula is stated over an algebraically closed field",
        "Extend scalars so that every simple component splits, then retry",
    ]


class BSNotCommuting(ComputationRefusal):
    default_code = "B_S_NOT_COMMUTING"


class DecompositionMismatch(ComputationRefusal):
    default_code = "DECOMPOSITION_MISMATCH"


class LemmaShapeViolation(ComputationRefusal):
    default_code = "LEMMA_SHAPE_VIOLATION"


class NotInvariantIdeal(ComputationRefusal):
    default_code = "NOT_INVARIANT_IDEAL"


class ConditionOneFails(ComputationRefusal):
    default_code = "CONDITION_ONE_FAILS"
    default_suggestions = [
        "Each I_k/J_k must be an absolutely irreducible (H, L)-module",
    ]


class ComplementInvalid(ComputationRefusal):
    default_code = "COMPLEMENT_INVALID"


class ConditionTwoPrimeFails(ComputationRefusal):
    default_code = "CONDITION_TWO_PRIME_FAILS"


class BudgetExceeded(ComputationRefusal):
    default_code = "BUDGET_EXCEEDED"
    default_suggestions = [
        "Lower --n or raise --budget explicitly",
    ]


class SizeMismatch(ComputationRefusal):
    default_code = "SIZE_MISMATCH"


class InvalidPartition(ComputationRefusal):
    default_code = "INVALID_PARTITION"


# ---------------------------------------------------------------------------
# Internal inconsistencies (exit code 1, hard failures)
# ---------------------------------------------------------------------------


class InternalInconsistency(LiePIError):
    """A postcondition failed; either the input is invalid or there is a bug."""

    exit_code = 1
    default_code = "INTERNAL_INCONSISTENCY"
    default_suggestions = [
        "Run 'liepi check' on the algebra to rule out invalid structure constants",
        "Report this issue with the input files and the correlation id",
    ]

    def __init__(self, message: str, **kwargs):
        context = kwargs.pop("context", {})
        for key in list(kwargs):
            if key not in ("error_code", "suggestions", "correlation_id"):
                value = kwargs.pop(key)
                if value is not None:
                    context[key] = value
        super().__init__(message=message, context=context, **kwargs)


class NoSolution(InternalInconsistency):
    default_code = "NO_SOLUTION"


class GroupSumNotInvariant(InternalInconsistency):
    default_code = "GROUP_SUM_NOT_INVARIANT"


class NonIntegralMultiplicity(InternalInconsistency):
    default_code = "NON_INTEGRAL_MULTIPLICITY"


def wrap_unexpected(original_error: Exception, **context) -> LiePIError:
    """
    Transform a foreign exception into a liepi error.

    Args:
        original_error: The exception raised by a dependency
        **context: Additional context to include

    Returns:
        The error itself if it already is a liepi error, else an InternalInconsistency
    """
    if isinstance(original_error, LiePIError):
        return original_error
    if isinstance(original_error, ZeroDivisionError):
        return InternalInconsistency(
            "Division by zero during exact arithmetic",
            original_error=str(original_error),
            **context
        )
    return InternalInconsistency(
        f"Unexpected error: {original_error}",
        error_type=type(original_error).__name__,
        original_error=str(original_error),
        **context
    )
