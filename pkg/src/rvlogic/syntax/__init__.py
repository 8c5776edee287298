"""Concrete syntax: tokenizer, parser, printer and file formats."""
from rvlogic.syntax.errors import ParseError, SourceSpan
from rvlogic.syntax.files import format_assignment, format_theory, parse_model_file, parse_theory_file
from rvlogic.syntax.parser import parse_formula, parse_inequality
from rvlogic.syntax.printer import print_formula, print_inequality

__all__ = [
    "ParseError",
    "SourceSpan",
    "format_assignment",
    "format_theory",
    "parse_formula",
    "parse_inequality",
    "parse_model_file",
    "parse_theory_file",
    "print_formula",
    "print_inequality",
]
