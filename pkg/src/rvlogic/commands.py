"""The rvlogic subcommands.

Each handler reads its settings from the State built by the CLI, writes a
machine-readable report through runner.emit() and returns the exit code:
0 for a positive verdict, 1 for a negative one. Errors propagate to the
caller, which reports them and exits with 2.
"""
from __future__ import annotations

import dataclasses
from pathlib import Path

from rvlogic.core.app import App
from rvlogic.core.domain import Mode, State, Theory
from rvlogic.core.errors import ModeError
from rvlogic.core.runner import Runner
from rvlogic.decide import predicates, procedure
from rvlogic.decide.procedure import BranchResult
from rvlogic.farkas.certificates import Entailed, Infeasible, format_certificate
from rvlogic.helpers.rationals import format_rational
from rvlogic.linear.forms import lf_to_formula, linearize
from rvlogic.luk.syntax import parse_luk
from rvlogic.luk.translate import Convention, luk_valid, translate
from rvlogic.proofs.checker import CheckReport, check
from rvlogic.proofs.derivation import Derivation, Fragment
from rvlogic.proofs.files import format_derivation, parse_derivation
from rvlogic.proofs.transforms import cut_eliminate, deduction_transform
from rvlogic.regions.decompose import decompose
from rvlogic.semantics.models import Model, evaluate
from rvlogic.semantics.poly import PolyModel, format_poly, parse_poly, poly_eval
from rvlogic.syntax.errors import ParseError, SourceSpan
from rvlogic.syntax.files import format_assignment, parse_assignments, parse_model_file, parse_theory_file
from rvlogic.syntax.parser import parse_formula, parse_inequality
from rvlogic.syntax.printer import print_formula, print_inequality

app = App()


def _read(path: str) -> str:
    data = Path(path).read_bytes()
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        line_start = data.rfind(b"\n", 0, e.start) + 1
        span = SourceSpan(data.count(b"\n", 0, e.start) + 1, e.start - line_start + 1, e.end - e.start)
        raise ParseError(f"{path} is not valid UTF-8", span) from e


def _mode(state: State) -> Mode:
    return Mode.EXTENDED if state.get("extended") else Mode.BASIC


def _theory(state: State, mode: Mode) -> Theory:
    path = state.get("theory")
    return parse_theory_file(_read(path), mode) if path else ()


def _model_line(model: Model) -> str:
    text = format_assignment(model.assignment)
    return f"MODEL {text}" if text else "MODEL"


def _branch_line(branch: BranchResult) -> str:
    signs = branch.signs or "."
    match branch.verdict:
        case Entailed(certificate):
            return f"BRANCH {signs} {format_certificate(certificate)}"
        case Infeasible(certificate):
            return f"BRANCH {signs} INFEASIBLE {format_certificate(certificate)}"
    return f"BRANCH {signs} REFUTED"


def _proof_line(report: CheckReport) -> str:
    if report.accepted and report.conclusion is not None:
        return f"PROOF ok {print_inequality(report.conclusion)}"
    if report.step is None:
        return f"PROOF rejected: {report.reason}"
    where = f"step {report.step}" if report.line is None else f"step {report.step} line {report.line}"
    return f"PROOF rejected {where}: {report.reason}"


def _derivation(path: str, state: State) -> Derivation:
    d = parse_derivation(_read(path))
    if state.get("fragment"):
        d = dataclasses.replace(d, fragment=Fragment(state["fragment"]))
    return d


@app.command
def decide(runner: Runner, state: State) -> int:
    """Decide T ⊨ goal; certificates on entailment, a countermodel otherwise."""
    mode = _mode(state)
    theory = _theory(state, mode)
    goal = parse_inequality(state["goal"], mode)
    verdict = procedure.decide(theory, goal, mode, prune=state.get("prune", False))
    runner.logger.info(f"Decided over {len(verdict.branches)} branches")
    if not isinstance(verdict, procedure.Refutes):
        runner.emit("RESULT entailed")
        for branch in verdict.branches:
            runner.emit(_branch_line(branch))
        return 0
    runner.emit("RESULT not-entailed")
    if state.get("countermodel"):
        runner.emit(_model_line(verdict.countermodel))
    if state.get("certificate"):
        for branch in verdict.branches:
            runner.emit(_branch_line(branch))
    return 1


@app.command(name="eval")
def eval_(runner: Runner, state: State) -> int:
    """Evaluate a formula in a rational model, or in ℚ[x] with --poly."""
    mode = _mode(state)
    f = parse_formula(state["formula"], mode)
    text = _read(state["model"])
    if state.get("poly"):
        if mode is Mode.EXTENDED:
            raise ModeError("polynomial models are only available in basic mode")
        value = poly_eval(f, PolyModel(parse_assignments(text, parse_poly)))
        runner.emit(f"VALUE {format_poly(value)}")
        return 0
    model = Model(parse_model_file(text), mode)
    runner.emit(f"VALUE {format_rational(evaluate(f, model))}")
    return 0


@app.command
def normalize(runner: Runner, state: State) -> int:
    f = parse_formula(state["formula"], _mode(state))
    runner.emit(f"NORMAL {print_formula(lf_to_formula(linearize(f)))}")
    return 0


@app.command
def regions(runner: Runner, state: State) -> int:
    """Print the guarded linear pieces of a formula."""
    f = parse_formula(state["formula"], _mode(state))
    decomposition = decompose(f, prune=state.get("prune", False))
    runner.emit(f"REGIONS {len(decomposition.pieces)}")
    for piece in decomposition.pieces:
        guards = "; ".join(f"0 <= {print_formula(lf_to_formula(g))}" for g in piece.guards) or "none"
        runner.emit(f"GUARDS {guards} => VALUE {print_formula(lf_to_formula(piece.value))}")
    return 0


@app.command
def check_proof(runner: Runner, state: State) -> int:
    report = check(_derivation(state["proof"], state))
    runner.emit(_proof_line(report))
    return 0 if report.accepted else 1


@app.command
def transform(runner: Runner, state: State) -> int:
    """Deduction transform of a proof file, or cut elimination with --cut-with.

    --hyp picks the discharged hypothesis (1-based, default the last).
    """
    d = _derivation(state["proof"], state)
    hyp = state.get("hyp")
    if hyp is not None and hyp < 1:
        runner.fail(f"--hyp counts from 1, got {hyp}")
    index = None if hyp is None else hyp - 1
    if state.get("cut_with"):
        result = cut_eliminate(d, _derivation(state["cut_with"], state), index)
        extra: list[str] = []
    else:
        deduction = deduction_transform(d, index)
        result = deduction.derivation
        extra = [f"R {format_rational(deduction.r)}"]
    report = check(result)
    runner.emit(_proof_line(report))
    for line in extra + format_derivation(result).splitlines():
        runner.emit(line)
    return 0 if report.accepted else 1


@app.command
def consistent(runner: Runner, state: State) -> int:
    mode = _mode(state)
    report = predicates.consistent(_theory(state, mode), mode)
    if not report.consistent:
        runner.emit("RESULT inconsistent")
        for branch in report.branches:
            runner.emit(_branch_line(branch))
        return 1
    runner.emit("RESULT consistent")
    if report.witness is not None:
        runner.emit(_model_line(report.witness))
    if mode is Mode.BASIC:
        forced = [letter for letter, is_forced in sorted(report.forced_zero.items()) if is_forced]
        runner.emit(f"FORCED-ZERO {' '.join(forced) or 'none'}")
    return 0


@app.command
def luk(runner: Runner, state: State) -> int:
    """Łukasiewicz (or, with --convention cont, continuous-logic) validity."""
    f = parse_luk(state["formula"])
    verdict = luk_valid(f, Convention(state.get("convention") or "luk"))
    runner.emit(f"RESULT {'valid' if verdict.valid else 'invalid'}")
    runner.emit(f"TRANSLATION {print_formula(translate(f))}")
    if verdict.countermodel is not None:
        runner.emit(_model_line(verdict.countermodel))
    return 0 if verdict.valid else 1


@app.command
def unit(runner: Runner, state: State) -> int:
    """Least r with T ⊨ formula <= r·unit."""
    mode = _mode(state)
    r = predicates.bound_by_unit(
        _theory(state, mode),
        parse_formula(state["formula"], mode),
        parse_formula(state["unit"], mode),
        mode,
    )
    if r is None:
        runner.emit("RESULT no-unit")
        return 1
    runner.emit(f"RESULT unit {format_rational(r)}")
    return 0


@app.command
def archimedean(runner: Runner, state: State) -> int:
    """Check whether T ⊨ r·formula <= bound for all r >= 0 forces T ⊨ formula <= 0."""
    mode = _mode(state)
    report = predicates.archimedean_pair(
        _theory(state, mode),
        parse_formula(state["formula"], mode),
        parse_formula(state["bound"], mode),
        mode,
    )
    runner.emit(f"RESULT archimedean {'holds' if report.holds else 'fails'}")
    runner.emit(f"FORALL {str(report.forall_r).lower()}")
    runner.emit(f"NEGATIVE {'n/a' if report.negative is None else str(report.negative).lower()}")
    runner.emit(f"ZERO-INSTANCE {str(report.zero_instance).lower()}")
    return 0 if report.holds else 1
