"""Parametric bounds: for which r >= 0 does a system entail bounded <= r·unit?

By the affine Farkas lemma (the system being nonempty) the good r are those
for which multipliers q >= 0 exist with

    Σ qᵢvᵢ = r·u_unit - u_bounded   and   Σ qᵢrᵢ <= r·s_unit - s_bounded.

This is linear in (q, r); eliminating every q leaves the exact set of good r,
an interval.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

from rvlogic.farkas.certificates import Infeasible, LinearSystem
from rvlogic.farkas.elimination import Row, fourier_motzkin
from rvlogic.farkas.solver import solve_feasibility
from rvlogic.linear.forms import LinearForm

logger = logging.getLogger("rvlogic.farkas.parametric")

SCALAR = "~r"


@dataclass(frozen=True)
class Interval:
    """Closed interval [lower, upper]; upper None means unbounded."""

    lower: Fraction
    upper: Fraction | None = None

    def intersect(self, other: "Interval") -> "Interval | None":
        lower = max(self.lower, other.lower)
        uppers = [u for u in (self.upper, other.upper) if u is not None]
        upper = min(uppers) if uppers else None
        if upper is not None and upper < lower:
            return None
        return Interval(lower, upper)

    def __contains__(self, r: Fraction) -> bool:
        return self.lower <= r and (self.upper is None or r <= self.upper)


def unit_interval(system: LinearSystem, bounded: LinearForm, unit: LinearForm) -> Interval | None:
    """The set of r >= 0 with system ⊨ 0 <= r·unit - bounded.

    Returns:
        The interval of good r (all of [0, ∞) for an empty system), or None
        when no r works.
    """
    if isinstance(solve_feasibility(system), Infeasible):
        return Interval(Fraction(0))
    size = len(system.hypotheses)
    names = [f"~q{i:04d}" for i in range(size)]
    rows = [Row(LinearForm.letter(name)) for name in names]
    rows.append(Row(LinearForm.letter(SCALAR)))

    letters = set(system.letter_order) | set(bounded.coeffs) | set(unit.coeffs)
    for letter in sorted(letters):
        coeffs = {name: row.coefficient(letter) for name, row in zip(names, system.hypotheses)}
        coeffs[SCALAR] = -unit.coefficient(letter)
        balance = LinearForm(coeffs, bounded.coefficient(letter))
        rows += [Row(balance), Row(-balance)]
    slack = {name: -row.affine for name, row in zip(names, system.hypotheses)}
    slack[SCALAR] = unit.affine
    rows.append(Row(LinearForm(slack, -bounded.affine)))

    elimination = fourier_motzkin(rows, tuple(names))
    if elimination.contradiction is not None:
        return None
    lower = Fraction(0)
    upper: Fraction | None = None
    for row in elimination.remaining:
        a = row.form.coefficient(SCALAR)
        c = row.form.affine
        if a > 0:
            lower = max(lower, -c / a)
        elif a < 0:
            upper = -c / a if upper is None else min(upper, -c / a)
        elif c < 0:
            return None
    if upper is not None and upper < lower:
        return None
    logger.debug(f"Good scalars: [{lower}, {upper if upper is not None else 'inf'})")
    return Interval(lower, upper)
