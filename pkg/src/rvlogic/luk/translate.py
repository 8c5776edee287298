"""Łukasiewicz and continuous logic inside the extended case.

Letters range over [0,1] by adding 0 <= P for every letter (a15 supplies
P <= 1), and the connectives are definable:

    ¬x     ↦  1 + (-1)x
    x ⊖ y  ↦  (x - y) ∨ 0
    ½x     ↦  (1/2)x

A formula is a tautology iff its translation equals the designated truth
value in every such model: 1 under the Łukasiewicz reading, 0 under the
continuous-logic reading where 0 is absolute truth.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction

from rvlogic.core.domain import Add, Formula, Inequality, Letter, Mode, One, Scale, Zero
from rvlogic.core.formulas import join, neg, sub
from rvlogic.decide.procedure import Refutes, Verdict, decide
from rvlogic.luk.syntax import LHalf, LMinus, LNot, LukFormula, LVar, luk_letters
from rvlogic.semantics.models import Model

logger = logging.getLogger("rvlogic.luk.translate")


class Convention(StrEnum):
    LUK = "luk"
    CONT = "cont"

    @property
    def truth(self) -> Formula:
        return One() if self is Convention.LUK else Zero()


def translate(f: LukFormula) -> Formula:
    """The extended-mode formula with the same value as f.

    Example:
        >>> translate(LNot(LVar("A")))
        Add(left=One(), right=Scale(q=Fraction(-1, 1), inner=Letter(name='A')))
    """
    match f:
        case LVar(name):
            return Letter(name)
        case LNot(arg):
            return Add(One(), neg(translate(arg)))
        case LMinus(left, right):
            return join(sub(translate(left), translate(right)), Zero())
        case LHalf(arg):
            return Scale(Fraction(1, 2), translate(arg))
    raise TypeError(f"Not a Łukasiewicz formula: {f!r}")


@dataclass(frozen=True)
class LukVerdict:
    """Outcome of luk_valid.

    Attributes:
        valid: The translation equals the truth value in every [0,1] model.
        countermodel: A valuation in [0,1] where it does not, restricted to the formula's letters.
        verdicts: The decide verdicts for "value <= truth" and "truth <= value".
    """

    valid: bool
    countermodel: Model | None
    verdicts: tuple[Verdict, Verdict]


def luk_valid(f: LukFormula, convention: Convention = Convention.LUK) -> LukVerdict:
    """Decide whether f is a tautology under the chosen truth convention."""
    letters = luk_letters(f)
    theory = tuple(Inequality(Zero(), Letter(letter)) for letter in letters)
    value, truth = translate(f), convention.truth
    verdicts = (
        decide(theory, Inequality(value, truth), Mode.EXTENDED),
        decide(theory, Inequality(truth, value), Mode.EXTENDED),
    )
    for verdict in verdicts:
        if isinstance(verdict, Refutes):
            model = verdict.countermodel.restricted_to(letters)
            logger.info(f"Not a tautology; countermodel {model.assignment}")
            return LukVerdict(False, model, verdicts)
    logger.info("Tautology")
    return LukVerdict(True, None, verdicts)
