"""Linear normal forms of meet-free formulas.

A LinearForm is a sparse rational combination of letters plus an affine
constant (the coefficient of 1). Zero coefficients are never stored and the
letters are kept in sorted order, so equal forms compare equal.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from rvlogic.core.domain import Add, Formula, Letter, Meet, One, Scale, Zero
from rvlogic.core.errors import NotLinearError
from rvlogic.core.formulas import sum_of


@dataclass(frozen=True)
class LinearForm:
    """Σ coeffs[P]·P + affine.

    Attributes:
        coeffs: Letter to nonzero coefficient.
        affine: The constant term; always 0 for basic-mode formulas.
    """

    coeffs: Mapping[str, Fraction] = field(default_factory=dict)
    affine: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        cleaned = {letter: Fraction(c) for letter, c in sorted(self.coeffs.items()) if c != 0}
        object.__setattr__(self, "coeffs", cleaned)
        object.__setattr__(self, "affine", Fraction(self.affine))

    @classmethod
    def letter(cls, name: str) -> LinearForm:
        return cls({name: Fraction(1)})

    @classmethod
    def constant(cls, q: Fraction | int) -> LinearForm:
        return cls({}, Fraction(q))

    @property
    def letters(self) -> list[str]:
        return list(self.coeffs)

    @property
    def is_constant(self) -> bool:
        return not self.coeffs

    @property
    def is_zero(self) -> bool:
        return not self.coeffs and self.affine == 0

    def coefficient(self, letter: str) -> Fraction:
        return self.coeffs.get(letter, Fraction(0))

    def key(self) -> tuple[tuple[tuple[str, Fraction], ...], Fraction]:
        """Hashable identity of the form."""
        return tuple(self.coeffs.items()), self.affine

    def value_at(self, assignment: Mapping[str, Fraction]) -> Fraction:
        """Evaluate with letters missing from the assignment read as 0."""
        total = self.affine
        for letter, c in self.coeffs.items():
            total += c * assignment.get(letter, Fraction(0))
        return total

    def __add__(self, other: LinearForm) -> LinearForm:
        return lf_add(self, other)

    def __sub__(self, other: LinearForm) -> LinearForm:
        return lf_sub(self, other)

    def __neg__(self) -> LinearForm:
        return lf_scale(Fraction(-1), self)


def lf_add(a: LinearForm, b: LinearForm) -> LinearForm:
    coeffs = dict(a.coeffs)
    for letter, c in b.coeffs.items():
        coeffs[letter] = coeffs.get(letter, Fraction(0)) + c
    return LinearForm(coeffs, a.affine + b.affine)


def lf_scale(q: Fraction | int, a: LinearForm) -> LinearForm:
    q = Fraction(q)
    return LinearForm({letter: q * c for letter, c in a.coeffs.items()}, q * a.affine)


def lf_sub(a: LinearForm, b: LinearForm) -> LinearForm:
    return lf_add(a, lf_scale(-1, b))


def lf_sum(forms: Iterable[LinearForm]) -> LinearForm:
    total = LinearForm()
    for form in forms:
        total = lf_add(total, form)
    return total


def linearize(f: Formula) -> LinearForm:
    """Normal form of a meet-free formula.

    Raises:
        NotLinearError: If f contains a Meet.

    Example:
        >>> linearize(Add(Letter("P"), Letter("P")))
        LinearForm(coeffs={'P': Fraction(2, 1)}, affine=Fraction(0, 1))
    """
    match f:
        case Zero():
            return LinearForm()
        case One():
            return LinearForm.constant(1)
        case Letter(name):
            return LinearForm.letter(name)
        case Add(left, right):
            return lf_add(linearize(left), linearize(right))
        case Scale(q, inner):
            return lf_scale(q, linearize(inner))
        case Meet():
            raise NotLinearError("formula contains a meet and has no linear normal form")
    raise TypeError(f"Not a formula: {f!r}")


def lf_to_formula(a: LinearForm, letter_order: list[str] | None = None) -> Formula:
    """Emit Σ aᵢPᵢ (+ a·1) as a left-folded sum.

    Coefficient 1 gives the bare letter; the zero form is Zero.

    Args:
        a: The form to print.
        letter_order: Order of the letter terms; defaults to sorted order.
            Letters of a missing from the order are appended in sorted order.
    """
    order = list(letter_order or [])
    order += [letter for letter in a.coeffs if letter not in order]
    terms: list[Formula] = []
    for letter in order:
        c = a.coefficient(letter)
        if c == 0:
            continue
        terms.append(Letter(letter) if c == 1 else Scale(c, Letter(letter)))
    if a.affine != 0:
        terms.append(One() if a.affine == 1 else Scale(a.affine, One()))
    return sum_of(terms)

