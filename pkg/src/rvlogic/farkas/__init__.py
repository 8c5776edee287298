"""Exact linear entailment with Farkas and infeasibility certificates."""
from rvlogic.farkas.certificates import (
    Entailed,
    FarkasCertificate,
    Infeasible,
    InfeasibilityCertificate,
    LinearSystem,
    LinearVerdict,
    Refuted,
    format_certificate,
    verify_certificate,
)
from rvlogic.farkas.parametric import Interval, unit_interval
from rvlogic.farkas.solver import Feasible, entails_linear, solve_feasibility

__all__ = [
    "Entailed",
    "FarkasCertificate",
    "Feasible",
    "Infeasible",
    "InfeasibilityCertificate",
    "Interval",
    "LinearSystem",
    "LinearVerdict",
    "Refuted",
    "entails_linear",
    "format_certificate",
    "solve_feasibility",
    "unit_interval",
    "verify_certificate",
]
