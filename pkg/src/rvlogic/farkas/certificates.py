"""Linear systems, certificates and verdicts.

A LinearSystem is a list of rows 0 <= v·x + r. A FarkasCertificate for a
target 0 <= u·x + s is a vector q >= 0 with Σ qᵢvᵢ = u and Σ qᵢrᵢ <= s; an
InfeasibilityCertificate is q >= 0 with Σ qᵢvᵢ = 0 and Σ qᵢrᵢ < 0.
Certificates are checked here by exact arithmetic and never trusted.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from rvlogic.core.errors import CertificateShapeError
from rvlogic.helpers.rationals import format_rationals
from rvlogic.linear.forms import LinearForm, lf_scale, lf_sum


@dataclass(frozen=True)
class LinearSystem:
    """Rows 0 <= hypothesis, over letters listed in letter_order."""

    hypotheses: tuple[LinearForm, ...]
    letter_order: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        letters = set(self.letter_order)
        for row in self.hypotheses:
            letters.update(row.coeffs)
        object.__setattr__(self, "hypotheses", tuple(self.hypotheses))
        object.__setattr__(self, "letter_order", tuple(sorted(letters)))


@dataclass(frozen=True)
class FarkasCertificate:
    multipliers: tuple[Fraction, ...]


@dataclass(frozen=True)
class InfeasibilityCertificate:
    multipliers: tuple[Fraction, ...]


type Certificate = FarkasCertificate | InfeasibilityCertificate


@dataclass(frozen=True)
class Entailed:
    """Every point of the system satisfies the target."""

    certificate: FarkasCertificate


@dataclass(frozen=True)
class Infeasible:
    """The system has no point at all."""

    certificate: InfeasibilityCertificate


@dataclass(frozen=True)
class Refuted:
    """A point of the system violating the target."""

    witness: dict[str, Fraction] = field(default_factory=dict)


type LinearVerdict = Entailed | Infeasible | Refuted


def combine_rows(system: LinearSystem, multipliers: tuple[Fraction, ...]) -> LinearForm:
    """Σ qᵢ·rowᵢ."""
    return lf_sum(lf_scale(q, row) for q, row in zip(multipliers, system.hypotheses))


def verify_certificate(system: LinearSystem, target: LinearForm | None, cert: Certificate) -> bool:
    """Check a certificate's defining (in)equalities exactly.

    Args:
        system: The hypotheses the multipliers refer to.
        target: The certified target; ignored for infeasibility certificates.
        cert: The certificate to check.

    Returns:
        True iff all multipliers are nonnegative and the identities hold.

    Raises:
        CertificateShapeError: If there is not one multiplier per hypothesis.
    """
    if len(cert.multipliers) != len(system.hypotheses):
        raise CertificateShapeError(
            f"certificate has {len(cert.multipliers)} multipliers for {len(system.hypotheses)} hypotheses"
        )
    if any(q < 0 for q in cert.multipliers):
        return False
    combo = combine_rows(system, cert.multipliers)
    match cert:
        case FarkasCertificate():
            if target is None:
                return False
            return combo.coeffs == target.coeffs and combo.affine <= target.affine
        case InfeasibilityCertificate():
            return not combo.coeffs and combo.affine < 0
    return False


def format_certificate(cert: Certificate) -> str:
    """'CERT q1 q2 ...' in hypothesis order."""
    values = format_rationals(cert.multipliers)
    return f"CERT {values}" if values else "CERT"
