"""Tokenizer for the formula grammar.

Tokens are numbers ("2", "3/4"), identifiers, and the punctuation
"<=", "/\\", "\\/", "+", "-", "*", "(", ")", ",". A "#" starts a comment that
runs to the end of the line.
"""
import re
from dataclasses import dataclass
from enum import StrEnum

from rvlogic.syntax.errors import ParseError, SourceSpan


class TokenKind(StrEnum):
    NUMBER = "number"
    IDENT = "identifier"
    LE = "'<='"
    MEET = "'/\\'"
    JOIN = "'\\/'"
    PLUS = "'+'"
    MINUS = "'-'"
    STAR = "'*'"
    LPAREN = "'('"
    RPAREN = "')'"
    COMMA = "','"
    END = "end of input"


@dataclass(frozen=True, slots=True)
class Token:
    kind: TokenKind
    text: str
    span: SourceSpan


TOKEN_PATTERN = re.compile(
    r"""
    (?P<space>[ \t\r\n]+)
  | (?P<comment>\#[^\n]*)
  | (?P<number>\d+(?:/\d+)?)
  | (?P<ident>[A-Za-z][A-Za-z0-9_]*)
  | (?P<le><=)
  | (?P<meet>/\\)
  | (?P<join>\\/)
  | (?P<punct>[-+*(),])
    """,
    re.VERBOSE,
)

PUNCTUATION = {
    "+": TokenKind.PLUS,
    "-": TokenKind.MINUS,
    "*": TokenKind.STAR,
    "(": TokenKind.LPAREN,
    ")": TokenKind.RPAREN,
    ",": TokenKind.COMMA,
}


def tokenize(text: str, line: int = 1) -> list[Token]:
    """Split text into tokens, ending with an END token.

    Args:
        text: Source text; may span several lines.
        line: Line number of the first line, for spans inside larger files.

    Raises:
        ParseError: On a character that starts no token, or a zero denominator.
    """
    tokens: list[Token] = []
    pos = 0
    line_start = 0
    while pos < len(text):
        match = TOKEN_PATTERN.match(text, pos)
        span = SourceSpan(line, pos - line_start + 1, 1)
        if match is None:
            raise ParseError(f"unexpected character {text[pos]!r}", span)
        kind = match.lastgroup
        lexeme = match.group()
        span = SourceSpan(line, pos - line_start + 1, len(lexeme))
        match kind:
            case "space":
                for offset, char in enumerate(lexeme):
                    if char == "\n":
                        line += 1
                        line_start = pos + offset + 1
            case "comment":
                pass
            case "number":
                if "/" in lexeme and int(lexeme.split("/")[1]) == 0:
                    raise ParseError(f"zero denominator in {lexeme}", span)
                tokens.append(Token(TokenKind.NUMBER, lexeme, span))
            case "ident":
                tokens.append(Token(TokenKind.IDENT, lexeme, span))
            case "le":
                tokens.append(Token(TokenKind.LE, lexeme, span))
            case "meet":
                tokens.append(Token(TokenKind.MEET, lexeme, span))
            case "join":
                tokens.append(Token(TokenKind.JOIN, lexeme, span))
            case _:
                tokens.append(Token(PUNCTUATION[lexeme], lexeme, span))
        pos = match.end()
    tokens.append(Token(TokenKind.END, "", SourceSpan(line, pos - line_start + 1, 1)))
    return tokens
