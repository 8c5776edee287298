"""Łukasiewicz formulas and their concrete syntax.

The primitive connectives are ¬ ("~"), truncated difference ⊖ ("-.") and,
for continuous logic, halving ("1/2"). Implication, strong disjunction and
equivalence are sugar:

    x -> y   :=  ~(x -. y)
    x (+) y  :=  ~(~x -. y)
    x <-> y  :=  ~((x -. y) (+) (y -. x))

Precedence from loosest to tightest: "<->", "->" (right associative),
"(+)", "-.", then the prefix operators "~" and "1/2".
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from rvlogic.core.errors import UnassignedLetterError
from rvlogic.syntax.errors import ParseError, SourceSpan


@dataclass(frozen=True, slots=True)
class LVar:
    name: str


@dataclass(frozen=True, slots=True)
class LNot:
    arg: LukFormula


@dataclass(frozen=True, slots=True)
class LMinus:
    left: LukFormula
    right: LukFormula


@dataclass(frozen=True, slots=True)
class LHalf:
    arg: LukFormula


type LukFormula = LVar | LNot | LMinus | LHalf


def implies(x: LukFormula, y: LukFormula) -> LukFormula:
    return LNot(LMinus(x, y))


def oplus(x: LukFormula, y: LukFormula) -> LukFormula:
    return LNot(LMinus(LNot(x), y))


def iff(x: LukFormula, y: LukFormula) -> LukFormula:
    return LNot(oplus(LMinus(x, y), LMinus(y, x)))


def luk_letters(f: LukFormula) -> list[str]:
    """Letters of f, sorted."""
    found: set[str] = set()
    stack = [f]
    while stack:
        match stack.pop():
            case LVar(name):
                found.add(name)
            case LNot(arg) | LHalf(arg):
                stack.append(arg)
            case LMinus(left, right):
                stack.extend((left, right))
    return sorted(found)


def luk_eval(f: LukFormula, assignment: Mapping[str, Fraction]) -> Fraction:
    """Value of f under the standard [0,1] semantics.

    Example:
        >>> luk_eval(implies(LVar("A"), LVar("B")), {"A": Fraction(1), "B": Fraction(1, 2)})
        Fraction(1, 2)
    """
    match f:
        case LVar(name):
            if name not in assignment:
                raise UnassignedLetterError(name)
            return Fraction(assignment[name])
        case LNot(arg):
            return 1 - luk_eval(arg, assignment)
        case LMinus(left, right):
            return max(luk_eval(left, assignment) - luk_eval(right, assignment), Fraction(0))
        case LHalf(arg):
            return luk_eval(arg, assignment) / 2
    raise TypeError(f"Not a Łukasiewicz formula: {f!r}")


TOKEN_PATTERN = re.compile(
    r"(?P<space>\s+)|(?P<op><->|->|\(\+\)|-\.|~|1/2|\(|\))|(?P<ident>[A-Za-z][A-Za-z0-9_]*)"
)


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens: list[tuple[str, int]] = []
    pos = 0
    while pos < len(text):
        match = TOKEN_PATTERN.match(text, pos)
        if match is None:
            raise ParseError(f"unexpected character {text[pos]!r}", SourceSpan(1, pos + 1, 1))
        if match.lastgroup != "space":
            tokens.append((match.group(), pos + 1))
        pos = match.end()
    tokens.append(("", len(text) + 1))
    return tokens


class LukParser:
    def __init__(self, text: str) -> None:
        self.tokens = _tokenize(text)
        self.pos = 0

    @property
    def current(self) -> str:
        return self.tokens[self.pos][0]

    def advance(self) -> str:
        token = self.current
        self.pos = min(self.pos + 1, len(self.tokens) - 1)
        return token

    def error(self, message: str) -> ParseError:
        text, column = self.tokens[self.pos]
        found = repr(text) if text else "end of input"
        return ParseError(f"{message}, found {found}", SourceSpan(1, column, max(len(text), 1)))

    def parse(self) -> LukFormula:
        f = self.equivalence()
        if self.current:
            raise self.error("expected end of input")
        return f

    def equivalence(self) -> LukFormula:
        f = self.implication()
        while self.current == "<->":
            self.advance()
            f = iff(f, self.implication())
        return f

    def implication(self) -> LukFormula:
        f = self.disjunction()
        if self.current == "->":
            self.advance()
            return implies(f, self.implication())
        return f

    def disjunction(self) -> LukFormula:
        f = self.difference()
        while self.current == "(+)":
            self.advance()
            f = oplus(f, self.difference())
        return f

    def difference(self) -> LukFormula:
        f = self.prefix()
        while self.current == "-.":
            self.advance()
            f = LMinus(f, self.prefix())
        return f

    def prefix(self) -> LukFormula:
        match self.current:
            case "~":
                self.advance()
                return LNot(self.prefix())
            case "1/2":
                self.advance()
                return LHalf(self.prefix())
            case "(":
                self.advance()
                f = self.equivalence()
                if self.current != ")":
                    raise self.error("expected ')'")
                self.advance()
                return f
        token = self.current
        if token and (token[0].isalpha()):
            self.advance()
            return LVar(token)
        raise self.error("expected a letter, '~', '1/2' or '('")


def parse_luk(text: str) -> LukFormula:
    """Parse a Łukasiewicz formula.

    Raises:
        ParseError: With the column of the offending token.

    Example:
        >>> parse_luk("A -> A")
        LNot(arg=LMinus(left=LVar(name='A'), right=LVar(name='A')))
    """
    return LukParser(text).parse()
