"""Linear canonical forms for proof checking.

Conclusions are compared modulo linear bookkeeping: every maximal Meet
subterm becomes an atom (its arguments canonicalized recursively, in their
original order), and the meet-free layer around the atoms is collected into
a rational combination of letters, meet atoms and 1. Terms with coefficient
0 vanish; letters come first by name, then meet atoms by their printed form,
then 1. Meets are never reordered, merged or distributed, so the lattice
axioms keep their content.

Canonically equal formulas take the same value in every model.
"""
from __future__ import annotations

from fractions import Fraction
from functools import cache

from rvlogic.core.domain import Add, Formula, Inequality, Letter, Meet, One, Scale, Zero
from rvlogic.core.formulas import sum_of
from rvlogic.syntax.printer import print_formula

type AtomKey = tuple[int, str]


def _collect(f: Formula, weight: Fraction, terms: dict[AtomKey, Fraction], atoms: dict[AtomKey, Formula]) -> None:
    match f:
        case Zero():
            return
        case One():
            key: AtomKey = (2, "")
            atoms[key] = f
        case Letter(name):
            key = (0, name)
            atoms[key] = f
        case Add(left, right):
            _collect(left, weight, terms, atoms)
            _collect(right, weight, terms, atoms)
            return
        case Scale(q, inner):
            if q != 0:
                _collect(inner, weight * q, terms, atoms)
            return
        case Meet(left, right):
            atom = Meet(canon(left), canon(right))
            key = (1, print_formula(atom))
            atoms[key] = atom
        case _:
            raise TypeError(f"Not a formula: {f!r}")
    terms[key] = terms.get(key, Fraction(0)) + weight


@cache
def canon(f: Formula) -> Formula:
    """The canonical representative of f.

    Example:
        >>> canon(Add(Letter("Q"), Add(Letter("P"), Scale(Fraction(-1), Letter("Q")))))
        Letter(name='P')
    """
    terms: dict[AtomKey, Fraction] = {}
    atoms: dict[AtomKey, Formula] = {}
    _collect(f, Fraction(1), terms, atoms)
    parts: list[Formula] = []
    for key in sorted(terms):
        q = terms[key]
        if q == 0:
            continue
        parts.append(atoms[key] if q == 1 else Scale(q, atoms[key]))
    return sum_of(parts)


def canon_inequality(ineq: Inequality) -> Inequality:
    return Inequality(canon(ineq.lhs), canon(ineq.rhs))


def same_formula(a: Formula, b: Formula) -> bool:
    return a == b or canon(a) == canon(b)


def same_inequality(a: Inequality, b: Inequality) -> bool:
    """Equal sides after canonicalization."""
    return same_formula(a.lhs, b.lhs) and same_formula(a.rhs, b.rhs)
