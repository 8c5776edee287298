"""Rational-valued structures and satisfaction.

A Model assigns an exact rational to every letter. In extended mode all
values lie in [-1, 1]; the constructor rejects anything else instead of
clamping.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from rvlogic.core.domain import Add, Formula, Inequality, Letter, Meet, Mode, One, Scale, Theory, Zero
from rvlogic.core.errors import ModeError, UnassignedLetterError

logger = logging.getLogger("rvlogic.semantics.models")


@dataclass(frozen=True)
class Model:
    """A rational assignment of letters, tied to a mode.

    Attributes:
        assignment: Letter name to value. Values are coerced to Fraction.
        mode: In extended mode every value must lie in [-1, 1].
    """

    assignment: Mapping[str, Fraction] = field(default_factory=dict)
    mode: Mode = Mode.BASIC

    def __post_init__(self) -> None:
        values = {letter: Fraction(value) for letter, value in sorted(self.assignment.items())}
        if self.mode is Mode.EXTENDED:
            for letter, value in values.items():
                if not -1 <= value <= 1:
                    raise ModeError(f"value {value} of {letter} lies outside [-1, 1]")
        object.__setattr__(self, "assignment", values)

    def __getitem__(self, letter: str) -> Fraction:
        try:
            return self.assignment[letter]
        except KeyError:
            raise UnassignedLetterError(letter) from None

    def restricted_to(self, letters: list[str]) -> Model:
        return Model({letter: self.assignment[letter] for letter in letters if letter in self.assignment}, self.mode)


def evaluate(f: Formula, model: Model) -> Fraction:
    """Value of f in the model, exactly.

    Raises:
        UnassignedLetterError: If f mentions a letter the model lacks.
        ModeError: If f uses 1 and the model is basic.
    """
    match f:
        case Zero():
            return Fraction(0)
        case One():
            if model.mode is Mode.BASIC:
                raise ModeError("constant 1 has no value in a basic model")
            return Fraction(1)
        case Letter(name):
            return model[name]
        case Add(left, right):
            return evaluate(left, model) + evaluate(right, model)
        case Meet(left, right):
            return min(evaluate(left, model), evaluate(right, model))
        case Scale(q, inner):
            return q * evaluate(inner, model)
    raise TypeError(f"Not a formula: {f!r}")


def satisfies(model: Model, ineq: Inequality) -> bool:
    return evaluate(ineq.lhs, model) <= evaluate(ineq.rhs, model)


def satisfies_theory(model: Model, theory: Theory) -> bool:
    """True iff every inequality of the theory holds in the model."""
    return all(satisfies(model, ineq) for ineq in theory)
