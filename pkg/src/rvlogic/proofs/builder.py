"""Incremental construction of checked derivations.

A ProofBuilder appends steps and validates each one on the spot with the
same step check the checker uses, so a builder bug surfaces where it
happens. Rule steps state their conclusion in canonical form unless the
caller supplies a restatement.
"""
from __future__ import annotations

import dataclasses
import logging
from fractions import Fraction

from rvlogic.core.domain import Add, Formula, Inequality, Mode, Theory, Zero
from rvlogic.core.errors import TransformError
from rvlogic.core.formulas import neg
from rvlogic.proofs.canon import canon_inequality, same_inequality
from rvlogic.proofs.checker import StepRejected, check_step, expected_conclusion
from rvlogic.proofs.derivation import (
    AxiomStep,
    Derivation,
    Fragment,
    HypStep,
    ProofStep,
    R1Step,
    R2Step,
    R3Step,
)
from rvlogic.proofs.schemas import AxiomId, Direction

logger = logging.getLogger("rvlogic.proofs.builder")

PLACEHOLDER = Inequality(Zero(), Zero())


class ProofBuilder:
    """Builds a derivation over a fixed theory, mode and fragment.

    Every method returns the 0-based index of the step it appended.

    Example:
        >>> b = ProofBuilder((Inequality(Zero(), Scale(2, Letter("P"))),), Mode.BASIC, Fragment.LIN)
        >>> b.conclusion(b.scale(b.hyp(0), Fraction(1, 2)))
        Inequality(lhs=Zero(), rhs=Letter(name='P'))
    """

    def __init__(self, theory: Theory, mode: Mode, fragment: Fragment = Fragment.FULL) -> None:
        self.theory = tuple(theory)
        self.mode = mode
        self.fragment = fragment
        self.steps: list[ProofStep] = []
        self.conclusions: list[Inequality] = []

    def conclusion(self, i: int) -> Inequality:
        return self.conclusions[i]

    @property
    def last(self) -> int:
        return len(self.steps) - 1

    def _push(self, step: ProofStep, stated: Inequality | None = None) -> int:
        try:
            if stated is None:
                stated = canon_inequality(expected_conclusion(step, self.conclusions, self.theory, self.mode))
            step = dataclasses.replace(step, conclusion=stated)
            check_step(step, self.conclusions, self.theory, self.mode, self.fragment)
        except StepRejected as e:
            logger.error(f"Invalid step {len(self.steps) + 1}: {e}")
            raise TransformError(f"cannot add step {len(self.steps) + 1}: {e}") from e
        self.steps.append(step)
        self.conclusions.append(stated)
        return len(self.steps) - 1

    # -- primitive steps ----------------------------------------------------

    def hyp(self, index: int) -> int:
        if not 0 <= index < len(self.theory):
            raise TransformError(f"there is no hypothesis {index + 1}")
        return self._push(HypStep(index, PLACEHOLDER), self.theory[index])

    def axiom(
        self,
        number: int,
        direction: str = "le",
        *,
        phi: Formula | None = None,
        psi: Formula | None = None,
        xi: Formula | None = None,
        r: Fraction | int | None = None,
        s: Fraction | int | None = None,
    ) -> int:
        formulas = {name: f for name, f in (("phi", phi), ("psi", psi), ("xi", xi)) if f is not None}
        scalars = {name: Fraction(q) for name, q in (("r", r), ("s", s)) if q is not None}
        step = AxiomStep(AxiomId(number, Direction(direction)), formulas, scalars, PLACEHOLDER)
        try:
            instance = expected_conclusion(step, self.conclusions, self.theory, self.mode)
        except StepRejected as e:
            raise TransformError(f"cannot instantiate a{number}: {e}") from e
        return self._push(step, instance)

    def r1(self, first: int, second: int, stated: Inequality | None = None) -> int:
        return self._push(R1Step(first, second, PLACEHOLDER), stated)

    def r2(self, premise: int, r: Fraction | int, xi: Formula | None = None, stated: Inequality | None = None) -> int:
        return self._push(R2Step(premise, Fraction(r), xi if xi is not None else Zero(), PLACEHOLDER), stated)

    def r3(self, premise: int, stated: Inequality | None = None) -> int:
        return self._push(R3Step(premise, PLACEHOLDER), stated)

    # -- linear combinators -------------------------------------------------

    def restate(self, i: int, ineq: Inequality) -> int:
        """Same inequality, written as ineq (must be canonically equal)."""
        return self.r2(i, 1, Zero(), stated=ineq)

    def refl(self, f: Formula) -> int:
        """f <= f, through a3."""
        return self.axiom(3, "le", phi=f)

    def add(self, i: int, f: Formula) -> int:
        """a <= b to a + f <= b + f."""
        return self.r2(i, 1, f)

    def scale(self, i: int, r: Fraction | int) -> int:
        """a <= b to ra <= rb, r >= 0."""
        return self.r2(i, r, Zero())

    def negate(self, i: int) -> int:
        """a <= b to -b <= -a."""
        c = self.conclusion(i)
        return self.r2(i, 1, Add(neg(c.lhs), neg(c.rhs)))

    def chain(self, *indices: int) -> int:
        """Transitivity through a sequence of steps."""
        current = indices[0]
        for following in indices[1:]:
            current = self.r1(current, following)
        return current

    def combine(self, i: int, j: int) -> int:
        """a <= b and c <= d to a + c <= b + d."""
        first = self.add(i, self.conclusion(j).lhs)
        second = self.add(j, self.conclusion(i).rhs)
        return self.r1(first, second)

    # -- assembly -------------------------------------------------------------

    def include(self, derivation: Derivation) -> list[int]:
        """Copy another derivation's steps in; its hypotheses must occur in this theory.

        Returns:
            The new index of every copied step.
        """
        hyp_map: dict[int, int] = {}
        for k, ineq in enumerate(derivation.theory):
            match = next((j for j, own in enumerate(self.theory) if same_inequality(own, ineq)), None)
            if match is None:
                raise TransformError(f"hypothesis {k + 1} of the included derivation is not in the theory")
            hyp_map[k] = match
        offset: list[int] = []
        for step in derivation.steps:
            match step:
                case HypStep(index):
                    moved: ProofStep = dataclasses.replace(step, index=hyp_map[index], span=None)
                case R1Step(first, second):
                    moved = dataclasses.replace(step, first=offset[first], second=offset[second], span=None)
                case R2Step(premise) | R3Step(premise):
                    moved = dataclasses.replace(step, premise=offset[premise], span=None)
                case _:
                    moved = dataclasses.replace(step, span=None)
            offset.append(self._push(moved, step.conclusion))
        return offset

    def build(self, final: int | None = None, stated: Inequality | None = None) -> Derivation:
        """The derivation so far, ending with step final (restated as stated, if given).

        The builder itself is not changed, so one builder can yield several
        derivations with different final steps.
        """
        steps = list(self.steps)
        final = self.last if final is None else final
        if final != self.last or stated is not None:
            target = stated if stated is not None else self.conclusion(final)
            step = R2Step(final, Fraction(1), Zero(), target)
            try:
                check_step(step, self.conclusions, self.theory, self.mode, self.fragment)
            except StepRejected as e:
                raise TransformError(f"cannot restate step {final + 1}: {e}") from e
            steps.append(step)
        return Derivation(self.theory, self.mode, tuple(steps), self.fragment)
