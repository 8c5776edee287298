"""Linear entailment with certificates.

entails_linear answers "does every point of the system satisfy the target?"
with exactly one of Entailed (Farkas certificate), Infeasible (the system is
empty) or Refuted (a rational point of the system violating the target).
Every answer is re-checked by exact arithmetic before it is returned.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

from rvlogic.core.errors import RvlError
from rvlogic.farkas.certificates import (
    Entailed,
    FarkasCertificate,
    Infeasible,
    InfeasibilityCertificate,
    LinearSystem,
    LinearVerdict,
    Refuted,
    verify_certificate,
)
from rvlogic.farkas.elimination import Row, back_substitute, fourier_motzkin
from rvlogic.linear.forms import LinearForm

logger = logging.getLogger("rvlogic.farkas.solver")


@dataclass(frozen=True)
class Feasible:
    """A point satisfying every row of the system."""

    witness: dict[str, Fraction]


def _unit(i: int, size: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(1 if j == i else 0) for j in range(size))


def _order(system: LinearSystem, target: LinearForm | None = None) -> tuple[str, ...]:
    letters = set(system.letter_order)
    if target is not None:
        letters.update(target.coeffs)
    return tuple(sorted(letters))


def solve_feasibility(system: LinearSystem) -> Infeasible | Feasible:
    """Decide whether the system has a point.

    Returns:
        Infeasible with a verified certificate, or Feasible with a witness
        satisfying all rows.
    """
    size = len(system.hypotheses)
    rows = [Row(form, False, _unit(i, size)) for i, form in enumerate(system.hypotheses)]
    order = _order(system)
    elimination = fourier_motzkin(rows, order)
    if elimination.contradiction is not None:
        cert = InfeasibilityCertificate(elimination.contradiction.provenance)
        _require(verify_certificate(system, None, cert), "infeasibility certificate failed verification")
        return Infeasible(cert)
    witness = back_substitute(elimination)
    _require(
        all(form.value_at(witness) >= 0 for form in system.hypotheses),
        "feasibility witness violates a hypothesis",
    )
    return Feasible(witness)


def entails_linear(system: LinearSystem, target: LinearForm) -> LinearVerdict:
    """Decide whether 0 <= target holds at every point of the system.

    Args:
        system: Rows 0 <= vᵢ·x + rᵢ.
        target: The form u·x + s whose nonnegativity is asked for.

    Returns:
        Entailed, Infeasible or Refuted; deterministic for fixed input.

    Example:
        >>> P = LinearForm.letter("P")
        >>> entails_linear(LinearSystem((P,)), P + P)
        Entailed(certificate=FarkasCertificate(multipliers=(Fraction(2, 1),)))
    """
    feasibility = solve_feasibility(system)
    if isinstance(feasibility, Infeasible):
        logger.debug("System is infeasible")
        return feasibility

    size = len(system.hypotheses)
    rows = [Row(form, False, _unit(i, size + 1)) for i, form in enumerate(system.hypotheses)]
    rows.append(Row(-target, True, _unit(size, size + 1)))
    elimination = fourier_motzkin(rows, _order(system, target))
    if elimination.contradiction is None:
        witness = back_substitute(elimination)
        for letter in _order(system, target):
            witness.setdefault(letter, Fraction(0))
        _require(
            all(form.value_at(witness) >= 0 for form in system.hypotheses) and target.value_at(witness) < 0,
            "refutation witness failed verification",
        )
        logger.debug(f"Target refuted at {witness}")
        return Refuted(dict(sorted(witness.items())))

    provenance = elimination.contradiction.provenance
    weight = provenance[size]
    _require(weight > 0, "contradiction does not involve the target")
    cert = FarkasCertificate(tuple(q / weight for q in provenance[:size]))
    _require(verify_certificate(system, target, cert), "Farkas certificate failed verification")
    return Entailed(cert)


def _require(condition: bool, message: str) -> None:
    if not condition:
        logger.error(f"Solver self-check failed: {message}")
        raise RvlError(f"internal solver error: {message}")
