"""Theory files and model files.

A theory file holds one inequality per line; a model file holds lines
"ident = value". Both accept LF or CRLF line ends, blank lines, and "#"
comments.
"""
import logging
import re
from fractions import Fraction
from typing import Callable, Mapping

from rvlogic.core.domain import Inequality, Mode, Theory
from rvlogic.helpers.rationals import format_rational, parse_rational
from rvlogic.syntax.errors import ParseError, SourceSpan
from rvlogic.syntax.parser import parse_inequality
from rvlogic.syntax.printer import print_inequality

logger = logging.getLogger("rvlogic.syntax.files")

ASSIGNMENT_PATTERN = re.compile(r"\s*([A-Za-z][A-Za-z0-9_]*)\s*=\s*(.*?)\s*\Z")


def _content(line: str) -> str:
    return line.split("#", 1)[0]


def parse_theory_file(text: str, mode: Mode) -> Theory:
    """Read a theory: one inequality per non-blank, non-comment line.

    Raises:
        ParseError: With the line and column of the first malformed inequality.
        ModeError: On constants that the mode does not allow.
    """
    theory: list[Inequality] = []
    for number, line in enumerate(text.splitlines(), start=1):
        if not _content(line).strip():
            continue
        theory.append(parse_inequality(line, mode, line=number))
    logger.debug(f"Read theory with {len(theory)} inequalities")
    return tuple(theory)


def parse_assignments[V](text: str, parse_value: Callable[[str], V]) -> dict[str, V]:
    """Read "ident = value" lines with a caller-supplied value parser.

    Args:
        text: File contents.
        parse_value: Converts the right-hand side; raises ValueError when malformed.

    Raises:
        ParseError: On a malformed line, a malformed value, or a duplicate letter.
    """
    assignment: dict[str, V] = {}
    for number, line in enumerate(text.splitlines(), start=1):
        content = _content(line)
        if not content.strip():
            continue
        match = ASSIGNMENT_PATTERN.match(content)
        if match is None:
            column = len(content) - len(content.lstrip()) + 1
            raise ParseError("expected 'letter = value'", SourceSpan(number, column, len(content.strip())))
        letter, raw = match.groups()
        if letter in assignment:
            raise ParseError(f"duplicate letter {letter}", SourceSpan(number, match.start(1) + 1, len(letter)))
        try:
            assignment[letter] = parse_value(raw)
        except ValueError as e:
            raise ParseError(str(e), SourceSpan(number, match.start(2) + 1, max(len(raw), 1))) from e
    return assignment


def parse_model_file(text: str) -> dict[str, Fraction]:
    """Read a rational model file.

    Example:
        >>> parse_model_file("P = -1\\r\\nQ = 3/2  # comment")
        {'P': Fraction(-1, 1), 'Q': Fraction(3, 2)}
    """
    return parse_assignments(text, parse_rational)


def format_theory(theory: Theory) -> str:
    return "".join(f"{print_inequality(ineq)}\n" for ineq in theory)


def format_assignment(assignment: Mapping[str, Fraction]) -> str:
    """Render an assignment as "P = -1, Q = -2", letters sorted."""
    return ", ".join(f"{letter} = {format_rational(assignment[letter])}" for letter in sorted(assignment))
