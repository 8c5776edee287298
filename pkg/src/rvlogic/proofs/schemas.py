"""Axiom schemas a1-a15.

An equality axiom "L = R" stands for the pair of inequality axioms
L <= R (direction le) and R <= L (direction ge). a5 and a14 are single
inequalities and only have the le direction. a15 (extended mode only) is
instantiated at a letter P and gives P <= 1 (le) and -1 <= P (ge).

Instances are produced by explicit substitution for the metavariables
phi, psi, xi and the scalars r, s; there is no unification.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from typing import Mapping

from rvlogic.core.domain import Add, Formula, Inequality, Letter, Meet, Mode, One, Scale, Zero
from rvlogic.core.errors import RvlError


class SchemaError(RvlError):
    """Raised when an axiom reference or substitution is invalid."""


class Direction(StrEnum):
    LE = "le"
    GE = "ge"


@dataclass(frozen=True, slots=True)
class AxiomId:
    number: int
    direction: Direction = Direction.LE

    def __str__(self) -> str:
        return f"a{self.number}.{self.direction}"

    @classmethod
    def parse(cls, text: str) -> AxiomId:
        """Read "a12.ge"; a missing direction means le.

        Raises:
            SchemaError: On an unknown axiom or direction.
        """
        name, _, direction = text.partition(".")
        if not name.startswith("a") or not name[1:].isdigit() or int(name[1:]) not in SCHEMAS:
            raise SchemaError(f"unknown axiom {text}")
        try:
            axiom = cls(int(name[1:]), Direction(direction or "le"))
        except ValueError:
            raise SchemaError(f"unknown direction in {text}") from None
        if axiom.direction not in SCHEMAS[axiom.number].directions:
            raise SchemaError(f"axiom a{axiom.number} has no {axiom.direction} direction")
        return axiom


@dataclass(frozen=True, slots=True)
class Schema:
    formulas: tuple[str, ...]
    scalars: tuple[str, ...] = ()
    directions: tuple[Direction, ...] = (Direction.LE, Direction.GE)


SCHEMAS: dict[int, Schema] = {
    1: Schema(("phi", "psi")),
    2: Schema(("phi", "psi", "xi")),
    3: Schema(("phi",)),
    4: Schema(("phi",)),
    5: Schema(("phi",), directions=(Direction.LE,)),
    6: Schema(("phi",), ("r", "s")),
    7: Schema(("phi", "psi"), ("r",)),
    8: Schema(("phi",), ("r", "s")),
    9: Schema(("phi",)),
    10: Schema(("phi", "psi")),
    11: Schema(("phi", "psi", "xi")),
    12: Schema(("phi", "psi", "xi")),
    13: Schema(("phi", "psi"), ("r",)),
    14: Schema(("phi", "psi"), directions=(Direction.LE,)),
    15: Schema(("phi",)),
}


def _sides(number: int, f: Mapping[str, Formula], q: Mapping[str, Fraction]) -> tuple[Formula, Formula]:
    phi, psi, xi = f.get("phi"), f.get("psi"), f.get("xi")
    r, s = q.get("r"), q.get("s")
    match number:
        case 1:
            return Add(phi, psi), Add(psi, phi)
        case 2:
            return Add(Add(phi, psi), xi), Add(psi, Add(phi, xi))
        case 3:
            return Add(phi, Zero()), phi
        case 4:
            return Scale(Fraction(1), phi), phi
        case 5:
            return Scale(Fraction(0), phi), Zero()
        case 6:
            return Add(Scale(r, phi), Scale(s, phi)), Scale(s + r, phi)
        case 7:
            return Add(Scale(r, phi), Scale(r, psi)), Scale(r, Add(phi, psi))
        case 8:
            return Scale(r, Scale(s, phi)), Scale(r * s, phi)
        case 9:
            return Meet(phi, phi), phi
        case 10:
            return Meet(phi, psi), Meet(psi, phi)
        case 11:
            return Meet(Meet(phi, psi), xi), Meet(phi, Meet(psi, xi))
        case 12:
            return Meet(Add(phi, xi), Add(psi, xi)), Add(Meet(phi, psi), xi)
        case 13:
            return Scale(r, Meet(phi, psi)), Meet(Scale(r, phi), Scale(r, psi))
        case 14:
            return Meet(phi, psi), psi
    raise SchemaError(f"unknown axiom a{number}")


def instantiate(
    axiom: AxiomId,
    formulas: Mapping[str, Formula],
    scalars: Mapping[str, Fraction],
    mode: Mode,
) -> Inequality:
    """The inequality an axiom step asserts.

    Args:
        axiom: Which schema and direction.
        formulas: Substitution for the schema's metavariables.
        scalars: Values for the schema's scalars.
        mode: a15 is only available in extended mode.

    Raises:
        SchemaError: On missing or unexpected metavariables, a negative scalar
            for a13, a15 in basic mode or at a non-letter.

    Example:
        >>> instantiate(AxiomId(14), {"phi": Letter("P"), "psi": Letter("Q")}, {}, Mode.BASIC)
        Inequality(lhs=Meet(left=Letter(name='P'), right=Letter(name='Q')), rhs=Letter(name='Q'))
    """
    schema = SCHEMAS.get(axiom.number)
    if schema is None:
        raise SchemaError(f"unknown axiom a{axiom.number}")
    if axiom.direction not in schema.directions:
        raise SchemaError(f"axiom a{axiom.number} has no {axiom.direction} direction")
    if set(formulas) != set(schema.formulas):
        expected = ", ".join(schema.formulas)
        raise SchemaError(f"a{axiom.number} expects formulas {expected}, got {', '.join(sorted(formulas)) or 'none'}")
    if set(scalars) != set(schema.scalars):
        expected = ", ".join(schema.scalars) or "none"
        raise SchemaError(f"a{axiom.number} expects scalars {expected}, got {', '.join(sorted(scalars)) or 'none'}")

    if axiom.number == 15:
        if mode is not Mode.EXTENDED:
            raise SchemaError("a15 is only available in extended mode")
        letter = formulas["phi"]
        if not isinstance(letter, Letter):
            raise SchemaError("a15 is instantiated at a letter only")
        if axiom.direction is Direction.LE:
            return Inequality(letter, One())
        return Inequality(Scale(Fraction(-1), One()), letter)

    if axiom.number == 13 and scalars["r"] < 0:
        raise SchemaError(f"a13 requires r >= 0, got r = {scalars['r']}")
    lhs, rhs = _sides(axiom.number, formulas, {k: Fraction(v) for k, v in scalars.items()})
    return Inequality(lhs, rhs) if axiom.direction is Direction.LE else Inequality(rhs, lhs)
