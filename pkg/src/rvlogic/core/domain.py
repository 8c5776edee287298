"""Core domain types for rvlogic.

This module defines the values every other module works with:
- Mode: the basic/extended switch
- Formula: the six-constructor syntax tree (Zero, One, Letter, Add, Meet, Scale)
- Inequality and Theory
- State and Channel: the command plumbing shared by the runner and the CLI

Formulas are immutable; structural equality is plain tree equality.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from typing import Any, Protocol

LETTER_PATTERN = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class Mode(StrEnum):
    """Basic case (no constant 1) or extended case (constant 1, models in [-1, 1])."""

    BASIC = "basic"
    EXTENDED = "extended"


@dataclass(frozen=True, slots=True)
class Zero:
    """The constant 0."""


@dataclass(frozen=True, slots=True)
class One:
    """The constant 1, extended case only."""


@dataclass(frozen=True, slots=True)
class Letter:
    """A proposition letter."""

    name: str

    def __post_init__(self) -> None:
        if not LETTER_PATTERN.match(self.name):
            raise ValueError(f"Invalid letter name: {self.name!r}")


@dataclass(frozen=True, slots=True)
class Add:
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Meet:
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Scale:
    """Rational scalar q applied to a formula; q is stored as a reduced Fraction."""

    q: Fraction
    inner: Formula

    def __post_init__(self) -> None:
        object.__setattr__(self, "q", Fraction(self.q))


type Formula = Zero | One | Letter | Add | Meet | Scale


@dataclass(frozen=True, slots=True)
class Inequality:
    """The ordered pair lhs <= rhs."""

    lhs: Formula
    rhs: Formula

    @classmethod
    def bare(cls, f: Formula) -> Inequality:
        """Expand the abbreviation of a bare formula f to 0 <= f."""
        return cls(Zero(), f)

    @property
    def is_bare(self) -> bool:
        return self.lhs == Zero()


type Theory = tuple[Inequality, ...]
"""A finite, ordered theory."""


def uses_one(f: Formula) -> bool:
    """Return True if the constant 1 occurs in f."""
    match f:
        case One():
            return True
        case Add(left, right) | Meet(left, right):
            return uses_one(left) or uses_one(right)
        case Scale(_, inner):
            return uses_one(inner)
        case _:
            return False


def count_meets(f: Formula) -> int:
    """Number of Meet nodes in f."""
    match f:
        case Meet(left, right):
            return 1 + count_meets(left) + count_meets(right)
        case Add(left, right):
            return count_meets(left) + count_meets(right)
        case Scale(_, inner):
            return count_meets(inner)
        case _:
            return 0


# -- Command plumbing ----------------------------------------------------------


class CommandFailedError(Exception):
    """Raised by Runner.fail() when a command cannot produce a verdict.

    The CLI maps it to exit code 2 after the message has been reported.
    """


type State = dict[str, Any]
"""Per-invocation settings handed to a command handler.

Built from the parsed command line; handlers read it and never mutate it.
"""


class Channel(Protocol):
    """Protocol for the sink a command writes its report to.

    Attributes:
        type: The channel type identifier (e.g. "cli", "test").
        command_name: The registered command to run.
        initial_state: The settings for the command.
    """

    type: str
    command_name: str
    initial_state: State

    def report_output(self, run_id: str, line: str) -> None:
        """Emit one line of the machine-readable report.

        Args:
            run_id: Unique identifier for the command run.
            line: The report line, without trailing newline.
        """
        ...

    def report_error(self, run_id: str, message: str) -> None:
        """Emit a diagnostic.

        Args:
            run_id: Unique identifier for the command run.
            message: Error message to report.
        """
        ...
