"""Recursive-descent parser for formulas and inequalities.

Grammar (ASCII, whitespace insensitive, "#" comments):

    ineq    := formula "<=" formula | formula
    formula := sum ( "/\\" sum | "\\/" sum )*
    sum     := signed ( ("+" | "-") signed )*
    signed  := ["-"] scaled
    scaled  := rational ["*"] prim | prim
    prim    := "0" | "1" | rational | ident | "(" formula ")"
             | min(f, g) | max(f, g) | abs(f) | pos(f) | neg(f)

A "-" directly followed by a number in signed position is part of a negative
rational, so "-1P" is the single node Scale(-1, P). Function names are only
functions when followed by "("; otherwise they are ordinary letters.
"""
import logging
from fractions import Fraction
from typing import NoReturn

from rvlogic.core.domain import Add, Formula, Inequality, Letter, Meet, Mode, One, Scale, Zero
from rvlogic.core.errors import ModeError
from rvlogic.core.formulas import Abs, Join, Lit, Minus, NegPart, PosPart, Sub, Sugared, sugar_expand
from rvlogic.syntax.errors import ParseError
from rvlogic.syntax.lexer import Token, TokenKind, tokenize

logger = logging.getLogger("rvlogic.syntax.parser")

FUNCTIONS = {"min": 2, "max": 2, "abs": 1, "pos": 1, "neg": 1}
PRIM_START = {TokenKind.NUMBER, TokenKind.IDENT, TokenKind.LPAREN}


class Parser:
    """One-shot parser over a token list.

    Attributes:
        tokens: The token stream, ending with END.
        mode: Basic mode rejects the constant 1 and nonzero literals.
    """

    def __init__(self, tokens: list[Token], mode: Mode) -> None:
        self.tokens = tokens
        self.mode = mode
        self.pos = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.current
        if token.kind is not TokenKind.END:
            self.pos += 1
        return token

    def expect(self, kind: TokenKind) -> Token:
        if self.current.kind is not kind:
            self.error(f"expected {kind}")
        return self.advance()

    def error(self, expected: str) -> NoReturn:
        token = self.current
        if token.kind in (TokenKind.NUMBER, TokenKind.IDENT):
            found = f"{token.kind} '{token.text}'"
        elif token.kind is TokenKind.END:
            found = str(token.kind)
        else:
            found = f"'{token.text}'"
        raise ParseError(f"{expected}, found {found}", token.span)

    def finish(self) -> None:
        if self.current.kind is not TokenKind.END:
            self.error("expected end of input")

    # -- grammar -----------------------------------------------------------

    def inequality(self) -> tuple[Sugared, Sugared]:
        lhs = self.formula()
        if self.current.kind is TokenKind.LE:
            self.advance()
            return lhs, self.formula()
        return Zero(), lhs

    def formula(self) -> Sugared:
        left = self.sum()
        while self.current.kind in (TokenKind.MEET, TokenKind.JOIN):
            op = self.advance()
            right = self.sum()
            left = Meet(left, right) if op.kind is TokenKind.MEET else Join(left, right)
        return left

    def sum(self) -> Sugared:
        left = self.signed()
        while self.current.kind in (TokenKind.PLUS, TokenKind.MINUS):
            op = self.advance()
            right = self.signed()
            left = Add(left, right) if op.kind is TokenKind.PLUS else Sub(left, right)
        return left

    def signed(self) -> Sugared:
        if self.current.kind is TokenKind.MINUS:
            self.advance()
            if self.current.kind is TokenKind.NUMBER:
                return self.scaled(negative=True)
            return Minus(self.scaled())
        return self.scaled()

    def scaled(self, negative: bool = False) -> Sugared:
        if self.current.kind is not TokenKind.NUMBER:
            return self.prim()
        token = self.advance()
        q = _rational(token.text)
        if negative:
            q = -q
        if self.current.kind is TokenKind.STAR:
            self.advance()
            return Scale(q, self.prim())
        if self.current.kind in PRIM_START:
            return Scale(q, self.prim())
        return self.literal(q, token)

    def literal(self, q: Fraction, token: Token) -> Sugared:
        if q != 0 and self.mode is Mode.BASIC:
            raise ModeError(f"{token.span}: numeric constant {token.text} is not available in basic mode")
        if q == 0:
            return Zero()
        if q == 1:
            return One()
        return Lit(q)

    def prim(self) -> Sugared:
        token = self.current
        match token.kind:
            case TokenKind.NUMBER:
                self.advance()
                return self.literal(_rational(token.text), token)
            case TokenKind.IDENT:
                self.advance()
                if token.text in FUNCTIONS and self.current.kind is TokenKind.LPAREN:
                    return self.function(token.text)
                return Letter(token.text)
            case TokenKind.LPAREN:
                self.advance()
                inner = self.formula()
                self.expect(TokenKind.RPAREN)
                return inner
        self.error("expected a formula")

    def function(self, name: str) -> Sugared:
        self.expect(TokenKind.LPAREN)
        first = self.formula()
        if FUNCTIONS[name] == 2:
            self.expect(TokenKind.COMMA)
            second = self.formula()
            self.expect(TokenKind.RPAREN)
            return Meet(first, second) if name == "min" else Join(first, second)
        self.expect(TokenKind.RPAREN)
        match name:
            case "abs":
                return Abs(first)
            case "pos":
                return PosPart(first)
            case _:
                return NegPart(first)


def _rational(text: str) -> Fraction:
    numerator, _, denominator = text.partition("/")
    return Fraction(int(numerator), int(denominator or 1))


def parse_formula(text: str, mode: Mode, line: int = 1) -> Formula:
    """Parse a single formula and expand its sugar.

    Args:
        text: The formula source.
        mode: Session mode.
        line: Line number used in error spans.

    Raises:
        ParseError: On malformed input, with the span of the offending token.
        ModeError: On 1 or a nonzero literal in basic mode.

    Example:
        >>> parse_formula("min(P, 0) /\\\\ Q", Mode.BASIC)
        Meet(left=Meet(left=Letter(name='P'), right=Zero()), right=Letter(name='Q'))
    """
    parser = Parser(tokenize(text, line), mode)
    tree = parser.formula()
    parser.finish()
    return sugar_expand(tree, mode)


def parse_inequality(text: str, mode: Mode, line: int = 1) -> Inequality:
    """Parse "f <= g", or a bare formula f meaning "0 <= f".

    Raises:
        ParseError: On malformed input.
        ModeError: On 1 or a nonzero literal in basic mode.
    """
    parser = Parser(tokenize(text, line), mode)
    lhs, rhs = parser.inequality()
    parser.finish()
    result = Inequality(sugar_expand(lhs, mode), sugar_expand(rhs, mode))
    logger.debug(f"Parsed inequality at line {line}")
    return result
