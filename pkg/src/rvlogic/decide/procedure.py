"""The finite-theory decision procedure.

Every hypothesis φᵢ <= ψᵢ and the goal are rewritten as 0 <= ψ - φ and
decomposed jointly into sign branches. On each branch the guards, the
branch values of the hypotheses and, in extended mode, the bounds
-1 <= P <= 1 of every letter form a linear system; the goal's branch value
must be entailed by it. The theory entails the goal iff every branch is
Entailed or Infeasible; otherwise the first refuting branch, in depth-first
order with positive signs first, supplies the countermodel.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from rvlogic.core.domain import Formula, Inequality, Mode, Theory, uses_one
from rvlogic.core.errors import ModeError, RvlError
from rvlogic.core.formulas import letters_of_all, sub
from rvlogic.farkas.certificates import LinearSystem, LinearVerdict, Refuted
from rvlogic.farkas.solver import entails_linear
from rvlogic.linear.forms import LinearForm
from rvlogic.regions.decompose import JointPiece, decompose_jointly
from rvlogic.semantics.models import Model, satisfies, satisfies_theory

logger = logging.getLogger("rvlogic.decide.procedure")


@dataclass(frozen=True)
class BranchResult:
    """One sign branch: its linear system, the goal's value there and the verdict.

    The system rows are the guards, then one row per hypothesis, then the
    unit bounds of each letter (extended mode), in that order.
    """

    signs: str
    system: LinearSystem
    target: LinearForm
    verdict: LinearVerdict


@dataclass(frozen=True)
class Entails:
    branches: tuple[BranchResult, ...]

    @property
    def entailed(self) -> bool:
        return True


@dataclass(frozen=True)
class Refutes:
    countermodel: Model
    branches: tuple[BranchResult, ...]

    @property
    def entailed(self) -> bool:
        return False


type Verdict = Entails | Refutes


def check_mode(formulas: list[Formula], mode: Mode) -> None:
    """Raises ModeError if a basic-mode input uses the constant 1."""
    if mode is Mode.BASIC and any(uses_one(f) for f in formulas):
        raise ModeError("constant 1 is not available in basic mode")


def unit_bounds(letters: list[str]) -> tuple[LinearForm, ...]:
    """Rows 0 <= 1 - P and 0 <= P + 1 for every letter."""
    rows: list[LinearForm] = []
    for letter in letters:
        rows.append(LinearForm({letter: Fraction(-1)}, Fraction(1)))
        rows.append(LinearForm({letter: Fraction(1)}, Fraction(1)))
    return tuple(rows)


def differences(theory: Theory) -> list[Formula]:
    return [sub(ineq.rhs, ineq.lhs) for ineq in theory]


def branch_system(piece: JointPiece, hypothesis_count: int, letters: list[str], mode: Mode) -> LinearSystem:
    """Linear system of one joint branch; the hypotheses are the first values of the piece."""
    rows = piece.guards + piece.values[:hypothesis_count]
    if mode is Mode.EXTENDED:
        rows += unit_bounds(letters)
    return LinearSystem(rows, tuple(letters))


def decide(theory: Theory, goal: Inequality, mode: Mode, prune: bool = False) -> Verdict:
    """Decide whether every model of the theory satisfies the goal.

    Args:
        theory: Finite theory.
        goal: The inequality to decide.
        mode: Basic or extended.
        prune: Skip branches whose guards alone are infeasible.

    Returns:
        Entails with per-branch certificates, or Refutes with a countermodel
        assigning every letter of the input (unconstrained letters get 0).

    Raises:
        ModeError: If a basic-mode input uses the constant 1.
    """
    formulas = differences(theory) + [sub(goal.rhs, goal.lhs)]
    check_mode(formulas, mode)
    letters = letters_of_all(formulas)
    branches: list[BranchResult] = []
    for piece in decompose_jointly(formulas, prune):
        system = branch_system(piece, len(theory), letters, mode)
        target = piece.values[-1]
        verdict = entails_linear(system, target)
        logger.debug(f"Branch '{piece.signs}': {type(verdict).__name__}")
        branches.append(BranchResult(piece.signs, system, target, verdict))

    for branch in branches:
        match branch.verdict:
            case Refuted(witness):
                model = Model({letter: witness.get(letter, Fraction(0)) for letter in letters}, mode)
                if not satisfies_theory(model, theory) or satisfies(model, goal):
                    logger.error(f"Countermodel {model.assignment} failed verification")
                    raise RvlError("internal error: countermodel failed verification")
                logger.info(f"Refuted on branch '{branch.signs}'")
                return Refutes(model, tuple(branches))
    logger.info(f"Entailed on {len(branches)} branches")
    return Entails(tuple(branches))
