"""Canonical printer for formulas and inequalities.

The output reparses to the identical tree. Parentheses appear only where the
grammar needs them: "/\\" is loosest and left-associative, "+" is
left-associative, and a scalar applies to the prim right after it. Every
Scale prints its rational explicitly ("-1Q", "1P"), with a "*" separator
unless the operand is a letter or starts with "(".
"""
from rvlogic.core.domain import Add, Formula, Inequality, Letter, Meet, One, Scale, Zero
from rvlogic.helpers.rationals import format_rational


def print_formula(f: Formula) -> str:
    """Render f in the concrete grammar.

    Example:
        >>> from fractions import Fraction
        >>> print_formula(Scale(Fraction(-1, 2), Add(Letter("P"), Letter("Q"))))
        '-1/2(P + Q)'
    """
    match f:
        case Meet(left, right):
            return f"{print_formula(left)} /\\ {_sum(right)}"
    return _sum(f)


def print_inequality(ineq: Inequality) -> str:
    return f"{print_formula(ineq.lhs)} <= {print_formula(ineq.rhs)}"


def _sum(f: Formula) -> str:
    match f:
        case Add(left, right):
            return f"{_sum(left)} + {_signed(right)}"
        case Meet():
            return f"({print_formula(f)})"
    return _signed(f)


def _signed(f: Formula) -> str:
    match f:
        case Scale(q, inner):
            return _scale(format_rational(q), inner)
        case Add() | Meet():
            return f"({print_formula(f)})"
    return _prim(f)


def _scale(q_text: str, inner: Formula) -> str:
    match inner:
        case Letter(name):
            return f"{q_text}{name}"
        case Zero() | One():
            return f"{q_text}*{_prim(inner)}"
    return f"{q_text}({print_formula(inner)})"


def _prim(f: Formula) -> str:
    match f:
        case Zero():
            return "0"
        case One():
            return "1"
        case Letter(name):
            return name
    return f"({print_formula(f)})"
