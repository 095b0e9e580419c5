"""Exact rational scalars.

Every matrix entry in baxterise is a :class:`fractions.Fraction`. Fractions are
kept in lowest terms with a positive denominator after every operation, so equal
values compare equal and hash identically.
"""

import re
from fractions import Fraction
from typing import Union

from baxterise.core.errors import BaxteriseError

Scalar = Fraction
ScalarLike = Union[Fraction, int, str]

_SCALAR_PATTERN = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*([+-]?\d+))?\s*$")


class ScalarError(BaxteriseError, ValueError):
    """Raised for malformed scalar text or division by zero."""

    pass


def scalar_parse(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into a canonical fraction.

    Args:
        text: Integer or ratio of integers

    Returns:
        The fraction p/q in lowest terms

    Raises:
        ScalarError: If the text is malformed or q is zero
    """
    match = _SCALAR_PATTERN.match(text)
    if not match:
        raise ScalarError(f"Malformed scalar: '{text}' (expected 'p/q' or 'p')")

    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ScalarError(f"Zero denominator in scalar: '{text}'")

    return Fraction(numerator, denominator)


def as_scalar(value: ScalarLike) -> Fraction:
    """Coerce an int, fraction or scalar string to a fraction."""
    if isinstance(value, Fraction):
        return value
    # bool is an int subclass
    if isinstance(value, bool):
        raise ScalarError(f"Not a scalar: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return scalar_parse(value)
    raise ScalarError(f"Not a scalar: {value!r}")


def scalar_inverse(s: ScalarLike) -> Fraction:
    """Return the exact multiplicative inverse of ``s``.

    Raises:
        ScalarError: If ``s`` is zero
    """
    s = as_scalar(s)
    if s == 0:
        raise ScalarError("Division by zero: 0 has no inverse")
    return 1 / s


def scalar_format(s: ScalarLike) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    return str(as_scalar(s))
