"""Finite-theory predicates built on the decision procedure.

consistent, strictly_positive_model, bound_by_unit (is there r with
T ⊨ φ <= rξ?) and archimedean_pair (does T ⊨ rφ <= ψ for all r >= 0 imply
T ⊨ φ <= 0?).
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction

from rvlogic.core.domain import Formula, Inequality, Letter, Mode, One, Scale, Theory, Zero
from rvlogic.core.formulas import letters_of_all, neg
from rvlogic.decide.procedure import (
    BranchResult,
    Refutes,
    branch_system,
    check_mode,
    decide,
    differences,
)
from rvlogic.farkas.parametric import Interval, unit_interval
from rvlogic.regions.decompose import decompose_jointly
from rvlogic.semantics.models import Model

logger = logging.getLogger("rvlogic.decide.predicates")


@dataclass(frozen=True)
class ConsistencyReport:
    """Outcome of a consistency check.

    Attributes:
        consistent: Extended mode: the theory has a model. Basic mode: always True.
        witness: A model of the theory; in basic mode one with a nonzero letter when possible.
        branches: Certificates of inconsistency (extended mode, inconsistent theories).
        forced_zero: Basic mode only: letter to whether the theory forces it to 0.
    """

    consistent: bool
    witness: Model | None = None
    branches: tuple[BranchResult, ...] = ()
    forced_zero: dict[str, bool] = field(default_factory=dict)


@dataclass(frozen=True)
class ArchimedeanReport:
    """Outcome of archimedean_pair.

    Attributes:
        forall_r: T ⊨ rφ <= ψ for every rational r >= 0.
        negative: T ⊨ φ <= 0; only computed when forall_r holds.
        zero_instance: T ⊨ 0 <= ψ, the r = 0 instance on its own.
    """

    forall_r: bool
    negative: bool | None
    zero_instance: bool

    @property
    def holds(self) -> bool:
        return not self.forall_r or bool(self.negative)


def consistent(theory: Theory, mode: Mode) -> ConsistencyReport:
    """Check whether the theory has a model.

    In basic mode the constant model 0 satisfies every theory, so the report
    instead says, per letter, whether the theory forces the letter to 0.
    """
    if mode is Mode.EXTENDED:
        verdict = decide(theory, Inequality(Zero(), Scale(Fraction(-1), One())), mode)
        if isinstance(verdict, Refutes):
            return ConsistencyReport(True, witness=verdict.countermodel)
        return ConsistencyReport(False, branches=verdict.branches)

    letters = letters_of_all([f for ineq in theory for f in (ineq.lhs, ineq.rhs)])
    forced: dict[str, bool] = {}
    witness: Model | None = None
    for letter in letters:
        forced[letter] = True
        for goal in (Inequality(Letter(letter), Zero()), Inequality(Zero(), Letter(letter))):
            verdict = decide(theory, goal, mode)
            if isinstance(verdict, Refutes):
                forced[letter] = False
                witness = witness or verdict.countermodel
    if witness is None:
        witness = Model({letter: Fraction(0) for letter in letters}, mode)
    logger.info(f"Letters forced to zero: {[letter for letter, is_forced in forced.items() if is_forced]}")
    return ConsistencyReport(True, witness=witness, forced_zero=forced)


def strictly_positive_model(theory: Theory, f: Formula, mode: Mode) -> Model | None:
    """A model of the theory with 0 < f, if there is one."""
    verdict = decide(theory, Inequality(f, Zero()), mode)
    return verdict.countermodel if isinstance(verdict, Refutes) else None


def good_scalars(theory: Theory, bounded: Formula, unit: Formula, mode: Mode) -> Interval | None:
    """The r >= 0 with T ⊨ bounded <= r·unit, as an interval, or None if there are none."""
    formulas = differences(theory) + [bounded, unit]
    check_mode(formulas, mode)
    letters = letters_of_all(formulas)
    good = Interval(Fraction(0))
    for piece in decompose_jointly(formulas):
        system = branch_system(piece, len(theory), letters, mode)
        interval = unit_interval(system, piece.values[-2], piece.values[-1])
        if interval is None:
            return None
        narrowed = good.intersect(interval)
        if narrowed is None:
            return None
        good = narrowed
        logger.debug(f"Branch '{piece.signs}': good scalars {good}")
    return good


def bound_by_unit(theory: Theory, f: Formula, unit: Formula, mode: Mode) -> Fraction | None:
    """The least r >= 0 with T ⊨ f <= r·unit, or None when no rational r works.

    Example:
        >>> bound_by_unit((), Letter("P"), One(), Mode.EXTENDED)
        Fraction(1, 1)
    """
    interval = good_scalars(theory, f, unit, mode)
    return None if interval is None else interval.lower


def archimedean_pair(theory: Theory, f: Formula, g: Formula, mode: Mode) -> ArchimedeanReport:
    """Check whether T ⊨ r·f <= g for every r >= 0, and if so whether T ⊨ f <= 0.

    Every finite theory is Archimedean, so report.holds is always True.
    """
    interval = good_scalars(theory, neg(g), neg(f), mode)
    forall_r = interval is not None and interval.lower == 0 and interval.upper is None
    zero_instance = decide(theory, Inequality(Zero(), g), mode).entailed
    negative = decide(theory, Inequality(f, Zero()), mode).entailed if forall_r else None
    return ArchimedeanReport(forall_r, negative, zero_instance)
