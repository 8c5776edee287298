"""Rational number text helpers.

Every rational that crosses a text boundary (files, CLI output, certificates)
goes through these two functions so the printed form is always reduced:
an integer, or "p/q" with q > 1.
"""
import re
from fractions import Fraction

RATIONAL_PATTERN = re.compile(r"\s*(-?\d+)(?:\s*/\s*(\d+))?\s*\Z")


def parse_rational(text: str) -> Fraction:
    """Parse "p" or "p/q" (optionally negative) into a reduced Fraction.

    Args:
        text: The rational literal. Surrounding whitespace is ignored.

    Returns:
        The exact rational value.

    Raises:
        ValueError: If text is not a rational literal or the denominator is 0.

    Example:
        >>> parse_rational("-6/4")
        Fraction(-3, 2)
        >>> parse_rational("7")
        Fraction(7, 1)
    """
    match = RATIONAL_PATTERN.match(text)
    if match is None:
        raise ValueError(f"Invalid rational: {text!r}")
    numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise ValueError(f"Zero denominator in rational: {text!r}")
    return Fraction(int(numerator), int(denominator or 1))


def format_rational(q: Fraction | int) -> str:
    """Print q reduced: "3", "-1/2", "0"."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_rationals(values: list[Fraction] | tuple[Fraction, ...]) -> str:
    """Space-separated reduced rationals, as used by certificate lines."""
    return " ".join(format_rational(q) for q in values)
