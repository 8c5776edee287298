"""Proof file format.

A proof file is line oriented; blank lines and "#" comments are ignored:

    mode basic
    fragment full
    hyp 1: 0 <= 2P
    1: hyp 1 ==> 0 <= 2P
    2: axiom a14.le [phi := P; psi := Q] ==> P /\\ Q <= Q
    3: r1 1 2 ==> ...
    4: r2 1 r=1/2 xi=0 ==> 0 <= P
    5: r3 4 ==> 0 /\\ 0 <= P /\\ 0

"mode" and "fragment" default to basic and full. Hypotheses and steps are
numbered from 1 and must appear in order; every step states its conclusion
after "==>".
"""
from __future__ import annotations

import logging
import re
from fractions import Fraction

from rvlogic.core.domain import Formula, Inequality, Mode
from rvlogic.core.errors import ProofFormatError
from rvlogic.helpers.rationals import format_rational, parse_rational
from rvlogic.proofs.derivation import AxiomStep, Derivation, Fragment, HypStep, ProofStep, R1Step, R2Step, R3Step
from rvlogic.proofs.schemas import AxiomId, SchemaError
from rvlogic.syntax.errors import SourceSpan
from rvlogic.syntax.parser import parse_formula, parse_inequality
from rvlogic.syntax.printer import print_formula, print_inequality

logger = logging.getLogger("rvlogic.proofs.files")

STEP_PATTERN = re.compile(r"\s*(\d+)\s*:\s*(.*?)\s*==>\s*(.*?)\s*\Z")
HYP_PATTERN = re.compile(r"\s*hyp\s+(\d+)\s*:\s*(.*?)\s*\Z")
AXIOM_PATTERN = re.compile(r"axiom\s+(\S+)\s*(?:\[(.*)\])?\Z")
R2_PATTERN = re.compile(r"r2\s+(\d+)\s+r\s*=\s*(\S+)\s+xi\s*=\s*(.+)\Z")
FORMULA_NAMES = ("phi", "psi", "xi")
SCALAR_NAMES = ("r", "s")


def _rational(text: str, line: int) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as e:
        raise ProofFormatError(str(e), line) from e


def _axiom_step(match: re.Match[str], mode: Mode, line: int) -> tuple[AxiomId, dict[str, Formula], dict[str, Fraction]]:
    try:
        axiom = AxiomId.parse(match.group(1))
    except SchemaError as e:
        raise ProofFormatError(str(e), line) from e
    formulas: dict[str, Formula] = {}
    scalars: dict[str, Fraction] = {}
    for binding in filter(str.strip, (match.group(2) or "").split(";")):
        name, sep, value = binding.partition(":=")
        name = name.strip()
        if not sep:
            raise ProofFormatError(f"expected 'name := value', got {binding.strip()!r}", line)
        if name in formulas or name in scalars:
            raise ProofFormatError(f"{name} is bound twice", line)
        if name in FORMULA_NAMES:
            formulas[name] = parse_formula(value, mode, line=line)
        elif name in SCALAR_NAMES:
            scalars[name] = _rational(value, line)
        else:
            raise ProofFormatError(f"unknown metavariable {name}", line)
    return axiom, formulas, scalars


def _step(body: str, conclusion: Inequality, mode: Mode, span: SourceSpan) -> ProofStep:
    line = span.line
    words = body.split()
    match words:
        case ["hyp", k] if k.isdigit():
            return HypStep(int(k) - 1, conclusion, span)
        case ["r1", i, j] if i.isdigit() and j.isdigit():
            return R1Step(int(i) - 1, int(j) - 1, conclusion, span)
        case ["r3", i] if i.isdigit():
            return R3Step(int(i) - 1, conclusion, span)
    if (m := AXIOM_PATTERN.match(body)) is not None:
        axiom, formulas, scalars = _axiom_step(m, mode, line)
        return AxiomStep(axiom, formulas, scalars, conclusion, span)
    if (m := R2_PATTERN.match(body)) is not None:
        r = _rational(m.group(2), line)
        return R2Step(int(m.group(1)) - 1, r, parse_formula(m.group(3), mode, line=line), conclusion, span)
    raise ProofFormatError(f"unrecognised step {body!r}", line)


def parse_derivation(text: str) -> Derivation:
    """Read a derivation from proof-file text.

    Raises:
        ProofFormatError: On malformed lines or out-of-order numbering.
        ParseError: On malformed formulas, with their line.
        ModeError: On constants the declared mode does not allow.
    """
    mode = Mode.BASIC
    fragment = Fragment.FULL
    theory: list[Inequality] = []
    steps: list[ProofStep] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        keyword, _, rest = content.partition(" ")
        if keyword in ("mode", "fragment"):
            if steps or theory:
                raise ProofFormatError(f"'{keyword}' must come before hypotheses and steps", number)
            try:
                if keyword == "mode":
                    mode = Mode(rest.strip())
                else:
                    fragment = Fragment(rest.strip())
            except ValueError as e:
                raise ProofFormatError(f"unknown {keyword} {rest.strip()!r}", number) from e
            continue
        if (m := HYP_PATTERN.match(content)) is not None:
            if steps:
                raise ProofFormatError("hypotheses must come before steps", number)
            if int(m.group(1)) != len(theory) + 1:
                raise ProofFormatError(f"expected hypothesis {len(theory) + 1}", number)
            theory.append(parse_inequality(m.group(2), mode, line=number))
            continue
        if (m := STEP_PATTERN.match(content)) is None:
            raise ProofFormatError("expected '<n>: <step> ==> <inequality>'", number)
        if int(m.group(1)) != len(steps) + 1:
            raise ProofFormatError(f"expected step {len(steps) + 1}", number)
        conclusion = parse_inequality(m.group(3), mode, line=number)
        span = SourceSpan(number, len(raw) - len(raw.lstrip()) + 1, len(content))
        steps.append(_step(m.group(2), conclusion, mode, span))
    logger.debug(f"Read {len(theory)} hypotheses and {len(steps)} steps")
    return Derivation(tuple(theory), mode, tuple(steps), fragment)


def format_step(step: ProofStep) -> str:
    match step:
        case HypStep(index):
            body = f"hyp {index + 1}"
        case AxiomStep(axiom, formulas, scalars):
            bindings = [f"{name} := {print_formula(formulas[name])}" for name in FORMULA_NAMES if name in formulas]
            bindings += [f"{name} := {format_rational(scalars[name])}" for name in SCALAR_NAMES if name in scalars]
            body = f"axiom {axiom} [{'; '.join(bindings)}]"
        case R1Step(first, second):
            body = f"r1 {first + 1} {second + 1}"
        case R2Step(premise, r, xi):
            body = f"r2 {premise + 1} r={format_rational(r)} xi={print_formula(xi)}"
        case R3Step(premise):
            body = f"r3 {premise + 1}"
    return f"{body} ==> {print_inequality(step.conclusion)}"


def format_derivation(d: Derivation) -> str:
    """The proof-file text of d; parse_derivation reads it back."""
    lines = [f"mode {d.mode}", f"fragment {d.fragment}"]
    lines += [f"hyp {k}: {print_inequality(ineq)}" for k, ineq in enumerate(d.theory, start=1)]
    lines += [f"{n}: {format_step(step)}" for n, step in enumerate(d.steps, start=1)]
    return "\n".join(lines) + "\n"
