"""rvlogic: real-valued propositional logic.

Formulas over proposition letters with 0, +, rational scaling and ∧ (plus
the constant 1 in the extended case), their exact rational semantics, a
certificate-producing decision procedure for finite theories, a proof
checker with deduction and cut-elimination transforms, and a Łukasiewicz
front-end.
"""
from rvlogic.core.domain import Add, Formula, Inequality, Letter, Meet, Mode, One, Scale, Theory, Zero
from rvlogic.core.errors import RvlError
from rvlogic.decide import Entails, Refutes, decide
from rvlogic.proofs import Derivation, check
from rvlogic.semantics import Model, evaluate
from rvlogic.syntax import parse_formula, parse_inequality, print_formula, print_inequality

__all__ = [
    "Add",
    "Derivation",
    "Entails",
    "Formula",
    "Inequality",
    "Letter",
    "Meet",
    "Mode",
    "Model",
    "One",
    "Refutes",
    "RvlError",
    "Scale",
    "Theory",
    "Zero",
    "check",
    "decide",
    "evaluate",
    "parse_formula",
    "parse_inequality",
    "print_formula",
    "print_inequality",
]
