"""Łukasiewicz / continuous-logic front-end."""
from rvlogic.luk.syntax import LHalf, LMinus, LNot, LukFormula, LVar, iff, implies, luk_eval, oplus, parse_luk
from rvlogic.luk.translate import Convention, LukVerdict, luk_valid, translate

__all__ = [
    "Convention",
    "LHalf",
    "LMinus",
    "LNot",
    "LVar",
    "LukFormula",
    "LukVerdict",
    "iff",
    "implies",
    "luk_eval",
    "luk_valid",
    "oplus",
    "parse_luk",
    "translate",
]
