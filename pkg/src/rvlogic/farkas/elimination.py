"""Fourier-Motzkin elimination with provenance.

Each row remembers the nonnegative combination of input rows it came from,
so a contradictory constant row is itself a certificate. Rows are
normalized (largest coefficient magnitude 1) and deduplicated after every
step, keeping the tightest constant for each direction.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from rvlogic.linear.forms import LinearForm, lf_add, lf_scale

logger = logging.getLogger("rvlogic.farkas.elimination")


@dataclass(frozen=True)
class Row:
    """0 <= form (0 < form when strict), with its input combination."""

    form: LinearForm
    strict: bool = False
    provenance: tuple[Fraction, ...] = ()

    @property
    def contradictory(self) -> bool:
        if not self.form.is_constant:
            return False
        return self.form.affine < 0 or (self.strict and self.form.affine == 0)

    @property
    def trivial(self) -> bool:
        return self.form.is_constant and not self.contradictory

    def scaled(self, q: Fraction) -> Row:
        return Row(lf_scale(q, self.form), self.strict, tuple(q * p for p in self.provenance))


@dataclass
class Elimination:
    """Outcome of eliminating letters in order.

    Attributes:
        order: The eliminated letters.
        stages: stages[k] holds the rows present before order[k] was eliminated.
        remaining: The rows left after the last elimination.
        contradiction: The first contradictory constant row, if any.
    """

    order: tuple[str, ...]
    stages: list[list[Row]] = field(default_factory=list)
    remaining: list[Row] = field(default_factory=list)
    contradiction: Row | None = None


def _combine(pos: Row, neg: Row, letter: str) -> Row:
    a = pos.form.coefficient(letter)
    b = -neg.form.coefficient(letter)
    form = lf_add(lf_scale(b, pos.form), lf_scale(a, neg.form))
    provenance = tuple(b * p + a * n for p, n in zip(pos.provenance, neg.provenance))
    return Row(form, pos.strict or neg.strict, provenance)


def normalize(row: Row) -> Row:
    if row.form.is_constant:
        return row
    largest = max(abs(c) for c in row.form.coeffs.values())
    return row.scaled(1 / largest) if largest != 1 else row


def deduplicate(rows: list[Row]) -> list[Row]:
    """Keep, per (coefficients, strictness), the row with the smallest constant."""
    kept: dict[tuple, Row] = {}
    for row in rows:
        key = (tuple(row.form.coeffs.items()), row.strict)
        current = kept.get(key)
        if current is None or row.form.affine < current.form.affine:
            kept[key] = row
    return list(kept.values())


def eliminate(rows: list[Row], letter: str) -> list[Row]:
    """Project the rows along one letter."""
    positive = [row for row in rows if row.form.coefficient(letter) > 0]
    negative = [row for row in rows if row.form.coefficient(letter) < 0]
    result = [row for row in rows if row.form.coefficient(letter) == 0]
    result += [normalize(_combine(pos, neg, letter)) for pos in positive for neg in negative]
    return deduplicate([row for row in result if not row.trivial])


def fourier_motzkin(rows: list[Row], order: tuple[str, ...]) -> Elimination:
    """Eliminate the letters of order one after another.

    Stops early at the first contradictory constant row.
    """
    result = Elimination(order)
    current = deduplicate([normalize(row) for row in rows if not row.trivial])
    for letter in order:
        contradiction = next((row for row in current if row.contradictory), None)
        if contradiction is not None:
            result.contradiction = contradiction
            return result
        result.stages.append(current)
        current = eliminate(current, letter)
        logger.debug(f"Eliminated {letter}: {len(current)} rows remain")
    result.remaining = current
    result.contradiction = next((row for row in current if row.contradictory), None)
    return result


def back_substitute(elimination: Elimination) -> dict[str, Fraction]:
    """Build a point satisfying every row of a contradiction-free elimination.

    Letters are fixed last-eliminated first; each takes the midpoint of its
    feasible interval, or lower + 1, upper - 1, or 0 when unbounded.
    """
    point: dict[str, Fraction] = {}
    for k in reversed(range(len(elimination.stages))):
        letter = elimination.order[k]
        lower: Fraction | None = None
        upper: Fraction | None = None
        for row in elimination.stages[k]:
            a = row.form.coefficient(letter)
            if a == 0:
                continue
            rest = _value_without(row.form, letter, point)
            bound = -rest / a
            if a > 0:
                lower = bound if lower is None else max(lower, bound)
            else:
                upper = bound if upper is None else min(upper, bound)
        point[letter] = _choose(lower, upper)
    return {letter: point[letter] for letter in sorted(point)}


def _value_without(form: LinearForm, letter: str, point: Mapping[str, Fraction]) -> Fraction:
    total = form.affine
    for other, c in form.coeffs.items():
        if other != letter:
            total += c * point.get(other, Fraction(0))
    return total


def _choose(lower: Fraction | None, upper: Fraction | None) -> Fraction:
    if lower is not None and upper is not None:
        return (lower + upper) / 2
    if lower is not None:
        return lower + 1
    if upper is not None:
        return upper - 1
    return Fraction(0)
