"""Proof checker.

check() walks the steps in order, recomputes what each rule or axiom
yields from the stated conclusions of earlier steps, and compares it with
the step's own stated conclusion modulo linear canonical form. The first
failing step is reported; a rejected derivation is a result, not an error.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

from rvlogic.core.domain import Add, Formula, Inequality, Meet, Mode, Scale, Theory, Zero, uses_one
from rvlogic.helpers.rationals import format_rational
from rvlogic.proofs.canon import same_formula, same_inequality
from rvlogic.proofs.derivation import (
    AxiomStep,
    Derivation,
    Fragment,
    HypStep,
    ProofStep,
    R1Step,
    R2Step,
    R3Step,
    references,
)
from rvlogic.proofs.schemas import SchemaError, instantiate
from rvlogic.syntax.errors import SourceSpan
from rvlogic.syntax.printer import print_formula, print_inequality

logger = logging.getLogger("rvlogic.proofs.checker")


class StepRejected(Exception):
    """A single step failed; carries the human-readable reason."""


@dataclass(frozen=True)
class CheckReport:
    """Outcome of check().

    Attributes:
        accepted: True iff every step is valid.
        conclusion: The final conclusion of an accepted derivation.
        step: 1-based number of the first failing step.
        span: Source span of that step, when the derivation was read from a file.
        reason: Why the step failed.
    """

    accepted: bool
    conclusion: Inequality | None = None
    step: int | None = None
    span: SourceSpan | None = None
    reason: str = ""

    @property
    def line(self) -> int | None:
        return None if self.span is None else self.span.line


def expected_conclusion(step: ProofStep, previous: list[Inequality], theory: Theory, mode: Mode) -> Inequality:
    """What the step's rule or axiom yields from the earlier conclusions.

    Raises:
        StepRejected: If the step cannot be applied (bad reference, side
            condition, schema misuse, premises that do not chain).
    """
    for ref in references(step):
        if not 0 <= ref < len(previous):
            raise StepRejected(f"reference to step {ref + 1} is not an earlier step")
    match step:
        case HypStep(index):
            if not 0 <= index < len(theory):
                raise StepRejected(f"there is no hypothesis {index + 1}")
            return theory[index]
        case AxiomStep(axiom, formulas, scalars):
            try:
                return instantiate(axiom, formulas, scalars, mode)
            except SchemaError as e:
                raise StepRejected(str(e)) from e
        case R1Step(first, second):
            left, right = previous[first], previous[second]
            if not same_formula(left.rhs, right.lhs):
                raise StepRejected(
                    f"premises do not chain: {print_formula(left.rhs)} differs from {print_formula(right.lhs)}"
                )
            return Inequality(left.lhs, right.rhs)
        case R2Step(premise, r, xi):
            if r < 0:
                raise StepRejected(f"rule r2 requires r >= 0, got r = {format_rational(r)}")
            p = previous[premise]
            return Inequality(Add(Scale(r, p.lhs), xi), Add(Scale(r, p.rhs), xi))
        case R3Step(premise):
            p = previous[premise]
            return Inequality(Meet(p.lhs, Zero()), Meet(p.rhs, Zero()))
    raise StepRejected(f"unknown step {step!r}")


def _mentioned(step: ProofStep) -> list[Formula]:
    """Every formula the step writes down: its conclusion and any it substitutes or adds."""
    mentioned = [step.conclusion.lhs, step.conclusion.rhs]
    match step:
        case AxiomStep(formulas=formulas):
            mentioned += formulas.values()
        case R2Step(xi=xi):
            mentioned.append(xi)
    return mentioned


def check_step(step: ProofStep, previous: list[Inequality], theory: Theory, mode: Mode, fragment: Fragment) -> None:
    """Validate one step against the conclusions before it.

    Raises:
        StepRejected: With the reason the step is invalid.
    """
    if isinstance(step, R2Step) and fragment is Fragment.MP:
        raise StepRejected("rule r2 is not allowed in fragment mp")
    if isinstance(step, R3Step) and fragment is not Fragment.FULL:
        raise StepRejected(f"rule r3 is not allowed in fragment {fragment}")
    if mode is Mode.BASIC and any(uses_one(f) for f in _mentioned(step)):
        raise StepRejected("constant 1 is not available in basic mode")
    expected = expected_conclusion(step, previous, theory, mode)
    if not same_inequality(step.conclusion, expected):
        raise StepRejected(
            f"stated conclusion {print_inequality(step.conclusion)} does not match {print_inequality(expected)}"
        )


def check(derivation: Derivation) -> CheckReport:
    """Check a derivation step by step.

    Returns:
        An accepted report carrying the final conclusion, or a rejection naming
        the first failing step, its source line and the reason.
    """
    if not derivation.steps:
        return CheckReport(False, reason="derivation has no steps")
    previous: list[Inequality] = []
    for number, step in enumerate(derivation.steps, start=1):
        try:
            check_step(step, previous, derivation.theory, derivation.mode, derivation.fragment)
        except StepRejected as e:
            logger.debug(f"Step {number} rejected: {e}")
            return CheckReport(False, step=number, span=step.span, reason=str(e))
        previous.append(step.conclusion)
    logger.debug(f"Accepted {len(previous)} steps")
    return CheckReport(True, conclusion=derivation.conclusion)
