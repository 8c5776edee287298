"""Helper utilities for rvlogic.

Exports:
    parse_rational: Read "3" or "-1/2" as an exact Fraction.
    format_rational: Print a Fraction in lowest terms, "p" or "p/q".
    format_rationals: Space-separated rationals, as used in certificate lines.
"""

from rvlogic.helpers.rationals import format_rational, format_rationals, parse_rational

__all__ = ["format_rational", "format_rationals", "parse_rational"]
