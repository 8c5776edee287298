"""Derivations: theory, mode, fragment and a list of steps.

Steps refer to earlier steps by 0-based index (the proof file format shows
them 1-based). Every step states its conclusion; the checker recomputes it.
Steps read from a file carry the span of their source line.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import StrEnum
from fractions import Fraction
from typing import Mapping

from rvlogic.core.domain import Formula, Inequality, Mode, Theory
from rvlogic.proofs.schemas import AxiomId
from rvlogic.syntax.errors import SourceSpan


class Fragment(StrEnum):
    """mp allows rule r1 only, lin r1 and r2, full all three rules."""

    MP = "mp"
    LIN = "lin"
    FULL = "full"

    @property
    def rank(self) -> int:
        return ("mp", "lin", "full").index(self.value)

    @classmethod
    def widest(cls, *fragments: Fragment) -> Fragment:
        return max(fragments, key=lambda fragment: fragment.rank)


@dataclass(frozen=True)
class HypStep:
    index: int
    conclusion: Inequality
    span: SourceSpan | None = None


@dataclass(frozen=True)
class AxiomStep:
    axiom: AxiomId
    formulas: Mapping[str, Formula]
    scalars: Mapping[str, Fraction]
    conclusion: Inequality
    span: SourceSpan | None = None


@dataclass(frozen=True)
class R1Step:
    """φ <= ξ, ξ <= ψ ⊢ φ <= ψ."""

    first: int
    second: int
    conclusion: Inequality
    span: SourceSpan | None = None


@dataclass(frozen=True)
class R2Step:
    """φ <= ψ ⊢ rφ + ξ <= rψ + ξ, r >= 0."""

    premise: int
    r: Fraction
    xi: Formula
    conclusion: Inequality
    span: SourceSpan | None = None


@dataclass(frozen=True)
class R3Step:
    """φ <= ψ ⊢ φ ∧ 0 <= ψ ∧ 0."""

    premise: int
    conclusion: Inequality
    span: SourceSpan | None = None


type ProofStep = HypStep | AxiomStep | R1Step | R2Step | R3Step


def references(step: ProofStep) -> tuple[int, ...]:
    match step:
        case R1Step(first, second):
            return (first, second)
        case R2Step(premise) | R3Step(premise):
            return (premise,)
    return ()


@dataclass(frozen=True)
class Derivation:
    theory: Theory
    mode: Mode
    steps: tuple[ProofStep, ...] = field(default_factory=tuple)
    fragment: Fragment = Fragment.FULL

    @property
    def conclusion(self) -> Inequality:
        return self.steps[-1].conclusion
