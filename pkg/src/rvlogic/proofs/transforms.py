"""Derivation transforms: deduction and cut elimination.

deduction_transform turns a derivation from T ∪ {0 <= ϑ} into one from T
alone whose conclusion carries the discharged hypothesis as a term:

    full fragment:  φ - rϑ⁻ <= ψ
    lin fragment:   φ + rϑ <= ψ

cut_eliminate joins derivations of 0 <= ψ from T ∪ {0 <= φ} and from
T ∪ {0 <= -φ} into one derivation of 0 <= ψ from T.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from rvlogic.core.domain import Add, Formula, Inequality, Scale, Zero
from rvlogic.core.errors import TransformError
from rvlogic.core.formulas import neg, neg_part
from rvlogic.proofs.builder import ProofBuilder
from rvlogic.proofs.canon import canon, same_formula, same_inequality
from rvlogic.proofs.checker import check
from rvlogic.proofs.derivation import AxiomStep, Derivation, Fragment, HypStep, R1Step, R2Step, R3Step
from rvlogic.proofs.library import (
    meet_glb_step,
    meet_mono_right_step,
    riesz_decomp_steps,
    scaled_parts_disjoint_steps,
    zero_le_neg,
    zero_le_pos,
)
from rvlogic.syntax.printer import print_inequality

logger = logging.getLogger("rvlogic.proofs.transforms")


@dataclass(frozen=True)
class DeductionResult:
    """The discharged derivation and the scalar r its conclusion carries."""

    r: Fraction
    derivation: Derivation
    discharged: Formula
    full: bool

    def term(self) -> Formula:
        return _term(self.discharged, self.r, self.full)


def _term(theta: Formula, r: Fraction, full: bool) -> Formula:
    return Scale(-r, neg_part(theta)) if full else Scale(r, theta)


def _designated(d: Derivation, index: int | None) -> tuple[int, Formula]:
    if not d.theory:
        raise TransformError("the derivation has no hypotheses to discharge")
    k = len(d.theory) - 1 if index is None else index
    if not 0 <= k < len(d.theory):
        raise TransformError(f"there is no hypothesis {k + 1}")
    hyp = d.theory[k]
    if hyp.lhs != Zero():
        raise TransformError(f"hypothesis {k + 1} must have the form 0 <= ϑ, got {print_inequality(hyp)}")
    return k, hyp.rhs


def deduction_transform(d: Derivation, hyp_index: int | None = None, full: bool | None = None) -> DeductionResult:
    """Discharge hypothesis hyp_index (0-based, default the last) from d.

    Args:
        d: A derivation that passes the checker.
        hyp_index: The hypothesis 0 <= ϑ to discharge.
        full: Force the full-fragment form; by default it is used exactly
            when d is in fragment full.

    Returns:
        The scalar r and a derivation from the remaining hypotheses, in
        fragment lin (lin form) or full (full form).

    Raises:
        TransformError: If d does not check or the hypothesis has the wrong shape.
    """
    report = check(d)
    if not report.accepted:
        raise TransformError(f"derivation rejected at step {report.step}: {report.reason}")
    k, theta = _designated(d, hyp_index)
    full = d.fragment is Fragment.FULL if full is None else full
    if not full and d.fragment is Fragment.FULL:
        raise TransformError("a derivation using rule r3 needs the full form")

    theory = d.theory[:k] + d.theory[k + 1 :]
    b = ProofBuilder(theory, d.mode, Fragment.FULL if full else Fragment.LIN)
    done: list[tuple[int, Fraction]] = []

    for step in d.steps:
        match step:
            case HypStep(index) if index == k:
                if full:
                    shifted = b.add(zero_le_pos(b, theta), neg(neg_part(theta)))
                    _, back = riesz_decomp_steps(b, theta)
                    done.append((b.chain(shifted, back), Fraction(1)))
                else:
                    done.append((b.refl(theta), Fraction(1)))
            case HypStep(index):
                done.append((b.hyp(index if index < k else index - 1), Fraction(0)))
            case AxiomStep(axiom, formulas, scalars):
                i = b.axiom(axiom.number, str(axiom.direction), **formulas, **scalars)
                done.append((i, Fraction(0)))
            case R1Step(first, second):
                (i1, r1), (i2, r2) = done[first], done[second]
                i = b.chain(b.add(i1, _term(theta, r2, full)), i2)
                done.append((i, r1 + r2))
            case R2Step(premise, s, xi):
                i, r = done[premise]
                done.append((b.r2(i, s, xi), s * r))
            case R3Step(premise):
                i, r = done[premise]
                if r == 0:
                    done.append((b.r3(i), r))
                    continue
                phi = d.steps[premise].conclusion.lhs
                offset = Scale(-r, neg_part(theta))
                cut = b.r3(i)
                pull = b.axiom(12, "ge", phi=phi, psi=Zero(), xi=offset)
                below = b.negate(b.scale(zero_le_neg(b, theta), r))
                lower = meet_mono_right_step(b, below, Add(phi, offset))
                done.append((b.chain(pull, lower, cut), r))

    final, r = done[-1]
    conclusion = d.conclusion
    stated = Inequality(Add(conclusion.lhs, _term(theta, r, full)), conclusion.rhs)
    logger.info(f"Discharged hypothesis {k + 1} with r = {r}")
    return DeductionResult(r, b.build(final, stated), theta, full)


def cut_eliminate(
    plus: Derivation,
    minus: Derivation,
    plus_index: int | None = None,
    minus_index: int | None = None,
) -> Derivation:
    """Combine T, 0 <= φ ⊢ 0 <= ψ and T, 0 <= -φ ⊢ 0 <= ψ into T ⊢ 0 <= ψ.

    The designated hypotheses default to the last of each theory.

    Raises:
        TransformError: If the two derivations do not fit together.
    """
    if plus.mode is not minus.mode:
        raise TransformError("the derivations use different modes")
    kp, phi = _designated(plus, plus_index)
    km, chi = _designated(minus, minus_index)
    if canon(chi) != canon(neg(phi)):
        raise TransformError("the discharged hypotheses must be 0 <= φ and 0 <= -φ")
    rest_plus = plus.theory[:kp] + plus.theory[kp + 1 :]
    rest_minus = minus.theory[:km] + minus.theory[km + 1 :]
    if len(rest_plus) != len(rest_minus) or not all(map(same_inequality, rest_plus, rest_minus)):
        raise TransformError("the remaining hypotheses differ")
    for d in (plus, minus):
        if canon(d.conclusion.lhs) != Zero():
            raise TransformError(f"conclusion must have the form 0 <= ψ, got {print_inequality(d.conclusion)}")
    psi = plus.conclusion.rhs
    if not same_formula(psi, minus.conclusion.rhs):
        raise TransformError("the two conclusions differ")

    fragment = Fragment.widest(plus.fragment, minus.fragment)
    full = fragment is Fragment.FULL
    fragment = Fragment.FULL if full else Fragment.LIN
    positive = deduction_transform(plus, kp, full)
    negative = deduction_transform(minus, km, full)
    goal = Inequality(Zero(), psi)
    b = ProofBuilder(rest_plus, plus.mode, fragment)

    for result in (positive, negative):
        if result.r == 0:
            logger.info("One side never uses its hypothesis")
            last = b.include(result.derivation)[-1]
            return b.build(last, goal)

    e_plus = b.include(positive.derivation)[-1]
    e_minus = b.include(negative.derivation)[-1]
    r, s = positive.r, negative.r
    if full:
        glb = meet_glb_step(b, b.negate(e_minus), b.negate(e_plus))
        disjoint, _ = scaled_parts_disjoint_steps(b, s, r, phi)
        final = b.negate(b.chain(glb, disjoint))
    else:
        both = b.combine(b.scale(e_plus, 1 / r), b.scale(e_minus, 1 / s))
        final = b.scale(both, 1 / (1 / r + 1 / s))
    logger.info(f"Cut eliminated with r = {r}, s = {s}")
    return b.build(final, goal)

