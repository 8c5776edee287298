"""Derived connectives and syntactic helpers.

The abbreviations of the logic (join, positive and negative parts, absolute
value, negation, subtraction, numeric constants) are not part of the core
tree. This module provides:
- constructor helpers that expand an abbreviation directly into core nodes
- a small sugared tree (Join, PosPart, ...) produced by the parser, and
  sugar_expand() which rewrites it into the six core constructors
- letters_of() and other read-only traversals
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from rvlogic.core.domain import Add, Formula, Letter, Meet, Mode, One, Scale, Zero
from rvlogic.core.errors import ModeError

MINUS_ONE = Fraction(-1)


# -- Core abbreviations --------------------------------------------------------


def neg(f: Formula) -> Formula:
    """-f, i.e. (-1)f."""
    return Scale(MINUS_ONE, f)


def sub(f: Formula, g: Formula) -> Formula:
    """f - g, i.e. f + (-g)."""
    return Add(f, neg(g))


def join(f: Formula, g: Formula) -> Formula:
    """f ∨ g, i.e. -(-f ∧ -g)."""
    return neg(Meet(neg(f), neg(g)))


def pos_part(f: Formula) -> Formula:
    """f⁺, i.e. 0 ∨ f."""
    return join(Zero(), f)


def neg_part(f: Formula) -> Formula:
    """f⁻, i.e. 0 ∨ (-f)."""
    return join(Zero(), neg(f))


def abs_value(f: Formula) -> Formula:
    """|f|, i.e. f ∨ (-f)."""
    return join(f, neg(f))


def const(q: Fraction | int, mode: Mode) -> Formula:
    """The numeric constant q.

    0 is the core constant Zero, 1 is One, any other q abbreviates q·1.

    Raises:
        ModeError: If q is nonzero in basic mode.
    """
    q = Fraction(q)
    if q == 0:
        return Zero()
    if mode is Mode.BASIC:
        raise ModeError(f"numeric constant {q} is not available in basic mode")
    if q == 1:
        return One()
    return Scale(q, One())


def sum_of(terms: list[Formula]) -> Formula:
    """Left-folded sum of terms; the empty sum is Zero."""
    if not terms:
        return Zero()
    total = terms[0]
    for term in terms[1:]:
        total = Add(total, term)
    return total


# -- Sugared trees -------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Lit:
    """A numeric literal, before mode checking."""

    q: Fraction


@dataclass(frozen=True, slots=True)
class Minus:
    inner: Sugared


@dataclass(frozen=True, slots=True)
class Sub:
    left: Sugared
    right: Sugared


@dataclass(frozen=True, slots=True)
class Join:
    left: Sugared
    right: Sugared


@dataclass(frozen=True, slots=True)
class PosPart:
    inner: Sugared


@dataclass(frozen=True, slots=True)
class NegPart:
    inner: Sugared


@dataclass(frozen=True, slots=True)
class Abs:
    inner: Sugared


type Sugared = Formula | Lit | Minus | Sub | Join | PosPart | NegPart | Abs


def sugar_expand(source: Sugared, mode: Mode) -> Formula:
    """Rewrite a sugared tree into the core constructors.

    Expansion is purely syntactic and deterministic; on a core formula it is
    the identity (apart from the mode check on One).

    Args:
        source: A tree mixing core nodes and sugar nodes.
        mode: The session mode; basic mode forbids One and nonzero literals.

    Returns:
        The expanded core formula.

    Raises:
        ModeError: If the tree uses 1 or a nonzero literal in basic mode.

    Example:
        >>> sugar_expand(Join(Letter("P"), Letter("Q")), Mode.BASIC)
        Scale(q=Fraction(-1, 1), inner=Meet(left=Scale(q=Fraction(-1, 1), inner=Letter(name='P')), right=Scale(q=Fraction(-1, 1), inner=Letter(name='Q'))))
    """
    match source:
        case Zero() | Letter():
            return source
        case One():
            if mode is Mode.BASIC:
                raise ModeError("constant 1 is not available in basic mode")
            return source
        case Lit(q):
            return const(q, mode)
        case Add(left, right):
            return Add(sugar_expand(left, mode), sugar_expand(right, mode))
        case Meet(left, right):
            return Meet(sugar_expand(left, mode), sugar_expand(right, mode))
        case Scale(q, inner):
            return Scale(q, sugar_expand(inner, mode))
        case Minus(inner):
            return neg(sugar_expand(inner, mode))
        case Sub(left, right):
            return sub(sugar_expand(left, mode), sugar_expand(right, mode))
        case Join(left, right):
            return join(sugar_expand(left, mode), sugar_expand(right, mode))
        case PosPart(inner):
            return pos_part(sugar_expand(inner, mode))
        case NegPart(inner):
            return neg_part(sugar_expand(inner, mode))
        case Abs(inner):
            return abs_value(sugar_expand(inner, mode))
    raise TypeError(f"Not a formula: {source!r}")


# -- Traversals ----------------------------------------------------------------


def letters_of(f: Formula) -> list[str]:
    """Sorted list of the distinct letters occurring in f."""
    found: set[str] = set()
    _collect_letters(f, found)
    return sorted(found)


def _collect_letters(f: Formula, found: set[str]) -> None:
    match f:
        case Letter(name):
            found.add(name)
        case Add(left, right) | Meet(left, right):
            _collect_letters(left, found)
            _collect_letters(right, found)
        case Scale(_, inner):
            _collect_letters(inner, found)


def letters_of_all(formulas: list[Formula]) -> list[str]:
    """Sorted union of the letters of several formulas."""
    found: set[str] = set()
    for f in formulas:
        _collect_letters(f, found)
    return sorted(found)


def rename_letters(f: Formula, mapping: dict[str, str]) -> Formula:
    """Rename letters according to mapping; unmapped letters are kept."""
    match f:
        case Letter(name):
            return Letter(mapping.get(name, name))
        case Add(left, right):
            return Add(rename_letters(left, mapping), rename_letters(right, mapping))
        case Meet(left, right):
            return Meet(rename_letters(left, mapping), rename_letters(right, mapping))
        case Scale(q, inner):
            return Scale(q, rename_letters(inner, mapping))
        case _:
            return f
