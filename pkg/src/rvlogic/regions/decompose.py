"""Sign case-splitting of formulas into guarded linear pieces.

At each Meet(φ, ξ) every combined piece of the two arguments is split on
the sign of d = φ_ε - ξ_δ: on the branch 0 <= d the meet equals ξ_δ, on the
branch 0 <= -d it equals φ_ε. Both branches are always emitted, the
positive one first, so the guard regions cover every assignment.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product

from rvlogic.core.domain import Add, Formula, Letter, Meet, One, Scale, Zero, count_meets
from rvlogic.farkas.certificates import Infeasible, LinearSystem
from rvlogic.farkas.solver import solve_feasibility
from rvlogic.linear.forms import LinearForm, lf_add, lf_scale, lf_sub

logger = logging.getLogger("rvlogic.regions.decompose")


@dataclass(frozen=True)
class GuardedPiece:
    """Inside the region 0 <= g for every guard g, the source equals value.

    Attributes:
        guards: One guard per meet on this branch.
        value: The linear value of the source on the region.
        signs: "+" or "-" per guard, in guard order.
    """

    guards: tuple[LinearForm, ...]
    value: LinearForm
    signs: str = ""


@dataclass(frozen=True)
class RegionDecomposition:
    source: Formula
    pieces: tuple[GuardedPiece, ...]


@dataclass(frozen=True)
class JointPiece:
    """A branch of several formulas decomposed together; values[i] belongs to formulas[i]."""

    guards: tuple[LinearForm, ...]
    values: tuple[LinearForm, ...]
    signs: str = ""


def _pieces(f: Formula) -> list[GuardedPiece]:
    match f:
        case Zero():
            return [GuardedPiece((), LinearForm())]
        case One():
            return [GuardedPiece((), LinearForm.constant(1))]
        case Letter(name):
            return [GuardedPiece((), LinearForm.letter(name))]
        case Scale(q, inner):
            return [GuardedPiece(p.guards, lf_scale(q, p.value), p.signs) for p in _pieces(inner)]
        case Add(left, right):
            return [
                GuardedPiece(a.guards + b.guards, lf_add(a.value, b.value), a.signs + b.signs)
                for a, b in product(_pieces(left), _pieces(right))
            ]
        case Meet(left, right):
            pieces: list[GuardedPiece] = []
            for a, b in product(_pieces(left), _pieces(right)):
                guards = a.guards + b.guards
                signs = a.signs + b.signs
                difference = lf_sub(a.value, b.value)
                pieces.append(GuardedPiece(guards + (difference,), b.value, signs + "+"))
                pieces.append(GuardedPiece(guards + (-difference,), a.value, signs + "-"))
            return pieces
    raise TypeError(f"Not a formula: {f!r}")


def _feasible(guards: tuple[LinearForm, ...]) -> bool:
    return not isinstance(solve_feasibility(LinearSystem(guards)), Infeasible)


def decompose(f: Formula, prune: bool = False) -> RegionDecomposition:
    """Split f into guarded linear pieces.

    Args:
        f: Any formula.
        prune: Drop pieces whose guard system has no point.

    Returns:
        The decomposition, positive branches first, at most 2^(#meets) pieces.

    Example:
        >>> d = decompose(Meet(Letter("P"), Letter("Q")))
        >>> [p.signs for p in d.pieces]
        ['+', '-']
    """
    pieces = _pieces(f)
    if prune:
        pieces = [p for p in pieces if _feasible(p.guards)]
    logger.debug(f"Decomposed into {len(pieces)} pieces")
    return RegionDecomposition(f, tuple(pieces))


def decompose_jointly(formulas: list[Formula], prune: bool = False) -> list[JointPiece]:
    """Decompose several formulas on shared branches (the product of their splits).

    Branches are enumerated depth-first with the first formula outermost and
    positive signs first.
    """
    per_formula = [_pieces(f) for f in formulas]
    joint: list[JointPiece] = []
    for combo in product(*per_formula):
        guards = tuple(g for piece in combo for g in piece.guards)
        if prune and not _feasible(guards):
            continue
        joint.append(JointPiece(guards, tuple(piece.value for piece in combo), "".join(p.signs for p in combo)))
    logger.debug(f"Joint decomposition of {len(formulas)} formulas: {len(joint)} branches")
    return joint


def piece_count_bound(f: Formula) -> int:
    """2^m for m meets; decompose never emits more pieces."""
    return 2 ** count_meets(f)
