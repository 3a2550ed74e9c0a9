"""Exact rational scalars and their "p/q" text form."""

import re
from typing import Any, Sequence, List

from sympy.polys.domains import QQ

from ..exceptions import MalformedInput, ZeroDenominator


Rational = Any  # element of QQ (gmpy2.mpq or PythonMPQ)

ZERO = QQ(0)
ONE = QQ(1)

_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(value: Any) -> Rational:
    """
    Parse a rational literal.

    Accepts "p/q", "p", and plain JSON integers. The sign belongs to the
    numerator; the denominator must be a positive integer literal.
    """
    if isinstance(value, bool):
        raise MalformedInput(f"Expected a rational literal, got boolean {value!r}")
    if isinstance(value, int):
        return QQ(value)
    if not isinstance(value, str):
        raise MalformedInput(
            f"Expected a rational literal, got {type(value).__name__}",
            context={"value": repr(value)},
        )

    match = _RATIONAL_PATTERN.match(value)
    if not match:
        raise MalformedInput(
            f"Cannot parse rational literal '{value}'",
            suggestions=["Write rationals as \"p/q\" or \"p\", e.g. \"-3/4\""],
        )

    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ZeroDenominator(value)
    return QQ(numerator, denominator)


def format_rational(value: Rational) -> str:
    """Render a rational as "p/q", or "p" when the denominator is 1."""
    numerator = int(QQ.numer(value))
    denominator = int(QQ.denom(value))
    if denominator == 1:
        return str(numerator)
    return f"{numerator}/{denominator}"


def parse_vector(values: Sequence[Any], length: int) -> List[Rational]:
    if len(values) != length:
        raise MalformedInput(
            f"Expected a coordinate vector of length {length}, got {len(values)}"
        )
    return [parse_rational(v) for v in values]


def format_vector(values: Sequence[Rational]) -> List[str]:
    return [format_rational(v) for v in values]


def denominators(values: Sequence[Rational]) -> List[int]:
    """Denominators greater than one, used to steer modular arithmetic."""
    return [int(QQ.denom(v)) for v in values if int(QQ.denom(v)) != 1]
