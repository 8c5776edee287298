"""The Q[x]-valued generalized structure.

Values are polynomials with rational coefficients ordered by the sign of
the leading coefficient of their difference, i.e. the order generated by
r < x for every rational r. Letters may be assigned any polynomial; Meet is
the minimum in that order. Only basic-mode formulas have a value here.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from rvlogic.core.domain import Add, Formula, Letter, Meet, One, Scale, Zero
from rvlogic.core.errors import ModeError, UnassignedLetterError
from rvlogic.helpers.rationals import format_rational

TERM_PATTERN = re.compile(r"([+-])?(\d+(?:/\d+)?)?(?:(x)(?:\^(\d+))?)?")


@dataclass(frozen=True, slots=True)
class PolyValue:
    """A polynomial; coeffs[i] is the coefficient of x^i, no trailing zeros."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        coeffs = [Fraction(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def constant(cls, q: Fraction | int) -> PolyValue:
        return cls((Fraction(q),))

    @classmethod
    def monomial(cls, degree: int, q: Fraction | int = 1) -> PolyValue:
        return cls((Fraction(0),) * degree + (Fraction(q),))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def sign(self) -> int:
        if not self.coeffs:
            return 0
        return 1 if self.coeffs[-1] > 0 else -1

    def __add__(self, other: PolyValue) -> PolyValue:
        size = max(len(self.coeffs), len(other.coeffs))
        padded = [Fraction(0)] * size
        for i, c in enumerate(self.coeffs):
            padded[i] += c
        for i, c in enumerate(other.coeffs):
            padded[i] += c
        return PolyValue(tuple(padded))

    def scale(self, q: Fraction) -> PolyValue:
        return PolyValue(tuple(q * c for c in self.coeffs))

    def __neg__(self) -> PolyValue:
        return self.scale(Fraction(-1))

    def __sub__(self, other: PolyValue) -> PolyValue:
        return self + (-other)

    def __str__(self) -> str:
        return format_poly(self)


@dataclass(frozen=True)
class PolyModel:
    """Letter name to polynomial value."""

    assignment: Mapping[str, PolyValue]

    def __getitem__(self, letter: str) -> PolyValue:
        try:
            return self.assignment[letter]
        except KeyError:
            raise UnassignedLetterError(letter) from None


def poly_leq(p: PolyValue, q: PolyValue) -> bool:
    """p <= q in the order generated by r < x.

    Example:
        >>> poly_leq(PolyValue.constant(5), PolyValue.monomial(1))
        True
    """
    return (q - p).sign() >= 0


def poly_min(p: PolyValue, q: PolyValue) -> PolyValue:
    return p if poly_leq(p, q) else q


def poly_eval(f: Formula, model: PolyModel) -> PolyValue:
    """Value of a basic-mode formula in the polynomial structure.

    Raises:
        ModeError: If f uses the constant 1.
        UnassignedLetterError: If f mentions an unassigned letter.
    """
    match f:
        case Zero():
            return PolyValue()
        case One():
            raise ModeError("the polynomial structure only interprets basic-mode formulas")
        case Letter(name):
            return model[name]
        case Add(left, right):
            return poly_eval(left, model) + poly_eval(right, model)
        case Meet(left, right):
            return poly_min(poly_eval(left, model), poly_eval(right, model))
        case Scale(q, inner):
            return poly_eval(inner, model).scale(q)
    raise TypeError(f"Not a formula: {f!r}")


def format_poly(p: PolyValue) -> str:
    """Render as "1/2 + 3x^2" (ascending degree); the zero polynomial is "0"."""
    parts: list[str] = []
    for degree, c in enumerate(p.coeffs):
        if c == 0:
            continue
        magnitude = abs(c)
        if degree == 0:
            body = format_rational(magnitude)
        else:
            power = "x" if degree == 1 else f"x^{degree}"
            body = power if magnitude == 1 else f"{format_rational(magnitude)}{power}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"{'-' if c < 0 else '+'} {body}")
    return " ".join(parts) or "0"


def parse_poly(text: str) -> PolyValue:
    """Parse a polynomial in x such as "1/2 + 3x^2" or "-x".

    Raises:
        ValueError: On malformed input.
    """
    source = "".join(text.split())
    if not source:
        raise ValueError("empty polynomial")
    total = PolyValue()
    pos = 0
    while pos < len(source):
        match = TERM_PATTERN.match(source, pos)
        sign, number, x, power = match.groups() if match else (None, None, None, None)
        if match is None or (number is None and x is None) or (pos > 0 and sign is None):
            raise ValueError(f"Invalid polynomial: {text!r}")
        q = Fraction(number) if number is not None else Fraction(1)
        if sign == "-":
            q = -q
        degree = (int(power) if power is not None else 1) if x else 0
        total = total + PolyValue.monomial(degree, q)
        pos = match.end()
    return total
