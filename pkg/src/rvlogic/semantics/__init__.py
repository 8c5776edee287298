"""Rational and polynomial semantics."""
from rvlogic.semantics.models import Model, evaluate, satisfies, satisfies_theory
from rvlogic.semantics.poly import PolyModel, PolyValue, poly_eval, poly_leq

__all__ = ["Model", "PolyModel", "PolyValue", "evaluate", "poly_eval", "poly_leq", "satisfies", "satisfies_theory"]
