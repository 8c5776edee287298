"""CLI parsing and integration tests.

Runs every subcommand end to end through main() with files in tmp_path and
checks the report lines and exit codes.
"""
import textwrap

import pytest

from rvlogic.cli import build_parser, main
from rvlogic.commands import app as commands_app

MODUS_PONENS = textwrap.dedent("""\
    mode basic
    fragment lin
    hyp 1: 2Q <= P
    hyp 2: 0 <= Q
    1: hyp 2 ==> 0 <= Q
    2: r2 1 r=2 xi=0 ==> 0 <= 2Q
    3: hyp 1 ==> 2Q <= P
    4: r1 2 3 ==> 0 <= P
""")

CUT_PLUS = textwrap.dedent("""\
    fragment lin
    hyp 1: 0 <= Q + -1P
    hyp 2: 0 <= Q + P
    hyp 3: 0 <= P
    1: hyp 3 ==> 0 <= P
    2: hyp 1 ==> 0 <= Q + -1P
    3: r2 2 r=1 xi=P ==> P <= Q
    4: r1 1 3 ==> 0 <= Q
""")

CUT_MINUS = textwrap.dedent("""\
    fragment lin
    hyp 1: 0 <= Q + -1P
    hyp 2: 0 <= Q + P
    hyp 3: 0 <= -1P
    1: hyp 3 ==> 0 <= -1P
    2: hyp 2 ==> 0 <= Q + P
    3: r2 2 r=1 xi=-1P ==> -1P <= Q
    4: r1 1 3 ==> 0 <= Q
""")


@pytest.fixture
def cli(monkeypatch, capsys):
    """Run the CLI and return (exit code, stdout lines, stderr)."""

    def _run(*args: str):
        monkeypatch.setattr("sys.argv", ["rvlogic", *args])
        with pytest.raises(SystemExit) as exc_info:
            main()
        captured = capsys.readouterr()
        return exc_info.value.code, captured.out.splitlines(), captured.err

    return _run


@pytest.fixture
def write(tmp_path):
    """Write a file into tmp_path and return its path as a string."""

    def _write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return _write


class TestArgParsing:
    """Test suite for command-line argument parsing."""

    def test_every_subcommand_is_registered(self):
        parser = build_parser()
        subparsers = next(a for a in parser._actions if a.dest == "command")
        assert set(subparsers.choices) == set(commands_app.commands)

    def test_decide_flags(self):
        args = build_parser().parse_args(["decide", "--goal", "0 <= P", "--extended", "--prune"])
        assert (args.goal, args.extended, args.prune, args.theory) == ("0 <= P", True, True, None)

    def test_goal_required(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args(["decide"])

    def test_fragment_choices(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args(["check-proof", "p.rvp", "--fragment", "huge"])

    def test_no_command_prints_help(self, cli):
        code, out, _ = cli()
        assert code == 0
        assert out[0].startswith("usage: rvlogic")


class TestDecide:
    """Integration tests for the decide subcommand."""

    def test_entailed(self, cli, write):
        """Test the single-branch certificate for 2Q <= P, 0 <= Q ⊨ 0 <= P."""
        theory = write("t.rvl", "2Q <= P\n0 <= Q   # Q is nonnegative\n")
        code, out, err = cli("decide", "--theory", theory, "--goal", "0 <= P")
        assert code == 0
        assert out == ["RESULT entailed", "BRANCH . CERT 1 2"]
        assert err == ""

    def test_not_entailed(self, cli, write):
        theory = write("t.rvl", "2Q <= P\n")
        code, out, _ = cli("decide", "--theory", theory, "--goal", "Q <= P", "--countermodel")
        assert code == 1
        assert out[0] == "RESULT not-entailed"
        assert out[1].startswith("MODEL P = ")
        assert len(out) == 2

    def test_countermodel_only_on_request(self, cli, write):
        theory = write("t.rvl", "2Q <= P\n")
        code, out, _ = cli("decide", "--theory", theory, "--goal", "Q <= P")
        assert code == 1
        assert out == ["RESULT not-entailed"]

    def test_certificate_lists_branches(self, cli, write):
        theory = write("t.rvl", "2Q <= P\n")
        code, out, _ = cli("decide", "--theory", theory, "--goal", "Q <= P", "--certificate")
        assert code == 1
        assert out == ["RESULT not-entailed", "BRANCH . REFUTED"]

    def test_invalid_utf8_theory(self, cli, tmp_path):
        theory = tmp_path / "t.rvl"
        theory.write_bytes(b"0 <= P\nQ <= \xff\n")
        code, out, err = cli("decide", "--theory", str(theory), "--goal", "0 <= P")
        assert code == 2
        assert out == []
        assert err.startswith("Error: 2:6: ")
        assert "not valid UTF-8" in err

    def test_meet_branches(self, cli, write):
        theory = write("t.rvl", "0 <= P\n")
        code, out, _ = cli("decide", "--theory", theory, "--goal", "0 <= min(P, 0)")
        assert code == 0
        assert out[0] == "RESULT entailed"
        assert [line.split()[1] for line in out[1:]] == ["+", "-"]

    def test_extended_without_theory(self, cli):
        code, out, _ = cli("decide", "--extended", "--goal", "P <= 1")
        assert code == 0
        assert out[0] == "RESULT entailed"

    def test_one_in_basic_mode(self, cli):
        code, out, err = cli("decide", "--goal", "P <= 1")
        assert code == 2
        assert out == []
        assert err.startswith("Error: ")
        assert "not available in basic mode" in err

    def test_parse_error(self, cli, write):
        theory = write("t.rvl", "0 <= P\nP <=\n")
        code, _, err = cli("decide", "--theory", theory, "--goal", "0 <= P")
        assert code == 2
        assert err.startswith("Error: 2:")

    def test_missing_theory_file(self, cli, tmp_path):
        code, _, err = cli("decide", "--theory", str(tmp_path / "missing.rvl"), "--goal", "0 <= P")
        assert code == 2
        assert "missing.rvl" in err


class TestEval:
    """Integration tests for the eval subcommand."""

    def test_rational_model(self, cli, write):
        model = write("m.rvl", "P = 1/2\nQ = -1\n")
        code, out, _ = cli("eval", "--model", model, "--formula", "min(P, Q)")
        assert (code, out) == (0, ["VALUE -1"])

    def test_extended_model(self, cli, write):
        model = write("m.rvl", "P = 1/2\n")
        code, out, _ = cli("eval", "--extended", "--model", model, "--formula", "1 + -1P")
        assert (code, out) == (0, ["VALUE 1/2"])

    def test_extended_model_out_of_range(self, cli, write):
        model = write("m.rvl", "P = 2\n")
        code, _, err = cli("eval", "--extended", "--model", model, "--formula", "P")
        assert code == 2
        assert "outside [-1, 1]" in err

    def test_unassigned_letter(self, cli, write):
        model = write("m.rvl", "P = 1\n")
        code, _, err = cli("eval", "--model", model, "--formula", "P + Q")
        assert code == 2
        assert "letter Q is not assigned" in err

    def test_polynomial_model(self, cli, write):
        model = write("m.rvl", "P = x\nQ = 1/2 + x^2\n")
        code, out, _ = cli("eval", "--poly", "--model", model, "--formula", "min(P, 2Q)")
        assert (code, out) == (0, ["VALUE x"])
        code, out, _ = cli("eval", "--poly", "--model", model, "--formula", "P + 2Q")
        assert out == ["VALUE 1 + x + 2x^2"]

    def test_polynomial_model_needs_basic_mode(self, cli, write):
        model = write("m.rvl", "P = x\n")
        code, _, err = cli("eval", "--poly", "--extended", "--model", model, "--formula", "P")
        assert code == 2
        assert "only available in basic mode" in err


class TestNormalizeAndRegions:
    """Integration tests for the normalize and regions subcommands."""

    def test_normalize(self, cli):
        code, out, _ = cli("normalize", "--formula", "2(P + Q) + -1Q")
        assert (code, out) == (0, ["NORMAL 2P + Q"])

    def test_normalize_cancels(self, cli):
        assert cli("normalize", "--formula", "P + -1P")[1] == ["NORMAL 0"]

    def test_normalize_rejects_meets(self, cli):
        code, _, err = cli("normalize", "--formula", "min(P, Q)")
        assert code == 2
        assert err.startswith("Error: ")

    def test_regions(self, cli):
        code, out, _ = cli("regions", "--formula", "P /\\ Q")
        assert code == 0
        assert out == [
            "REGIONS 2",
            "GUARDS 0 <= P + -1Q => VALUE Q",
            "GUARDS 0 <= -1P + Q => VALUE P",
        ]

    def test_regions_without_meets(self, cli):
        assert cli("regions", "--formula", "P + P")[1] == ["REGIONS 1", "GUARDS none => VALUE 2P"]


class TestCheckProof:
    """Integration tests for the check-proof subcommand."""

    def test_accepted(self, cli, write):
        code, out, _ = cli("check-proof", write("mp.rvp", MODUS_PONENS))
        assert (code, out) == (0, ["PROOF ok 0 <= P"])

    def test_rejected_with_step_and_line(self, cli, write):
        proof = write("bad.rvp", MODUS_PONENS.replace("r=2 xi=0 ==> 0 <= 2Q", "r=-2 xi=0 ==> 0 <= -2Q"))
        code, out, _ = cli("check-proof", proof)
        assert code == 1
        assert out == ["PROOF rejected step 2 line 6: rule r2 requires r >= 0, got r = -2"]

    def test_fragment_override(self, cli, write):
        code, out, _ = cli("check-proof", write("mp.rvp", MODUS_PONENS), "--fragment", "mp")
        assert code == 1
        assert out == ["PROOF rejected step 2 line 6: rule r2 is not allowed in fragment mp"]

    def test_malformed_file(self, cli, write):
        code, _, err = cli("check-proof", write("bad.rvp", "1: r9 1 ==> 0 <= P\n"))
        assert code == 2
        assert err.startswith("Error: line 1: unrecognised step")


class TestTransform:
    """Integration tests for the transform subcommand."""

    def test_deduction(self, cli, write):
        """Test that discharging 0 <= Q prints r = 2 and a checked lin-form derivation."""
        code, out, _ = cli("transform", write("mp.rvp", MODUS_PONENS))
        assert code == 0
        assert out[:5] == ["PROOF ok 0 + 2Q <= P", "R 2", "mode basic", "fragment lin", "hyp 1: 2Q <= P"]
        assert not any(line.startswith("hyp 2") for line in out)

    def test_output_is_a_proof_file(self, cli, write):
        _, out, _ = cli("transform", write("mp.rvp", MODUS_PONENS))
        proof = write("out.rvp", "\n".join(out[2:]) + "\n")
        assert cli("check-proof", proof)[:2] == (0, ["PROOF ok 0 + 2Q <= P"])

    def test_hypothesis_must_be_bare(self, cli, write):
        code, _, err = cli("transform", write("mp.rvp", MODUS_PONENS), "--hyp", "1")
        assert code == 2
        assert "hypothesis 1 must have the form 0 <= ϑ, got 2Q <= P" in err

    def test_hypothesis_counts_from_one(self, cli, write):
        code, out, err = cli("transform", write("mp.rvp", MODUS_PONENS), "--hyp", "0")
        assert (code, out) == (2, [])
        assert "Error: --hyp counts from 1, got 0" in err

    def test_cut(self, cli, write):
        plus, minus = write("plus.rvp", CUT_PLUS), write("minus.rvp", CUT_MINUS)
        code, out, _ = cli("transform", plus, "--cut-with", minus)
        assert code == 0
        assert out[:5] == ["PROOF ok 0 <= Q", "mode basic", "fragment lin", "hyp 1: 0 <= Q + -1P", "hyp 2: 0 <= Q + P"]
        assert not any(line.startswith("hyp 3") for line in out)

    def test_cut_mismatch(self, cli, write):
        plus = write("plus.rvp", CUT_PLUS)
        code, _, err = cli("transform", plus, "--cut-with", plus)
        assert code == 2
        assert "0 <= φ and 0 <= -φ" in err


class TestPredicates:
    """Integration tests for consistent, unit and archimedean."""

    def test_consistent_basic(self, cli, write):
        theory = write("t.rvl", "0 <= P\nP <= 0\n0 <= Q\n")
        code, out, _ = cli("consistent", "--theory", theory)
        assert code == 0
        assert out[0] == "RESULT consistent"
        assert out[1].startswith("MODEL P = 0, Q = ")
        assert out[2] == "FORCED-ZERO P"

    def test_nothing_forced(self, cli, write):
        theory = write("t.rvl", "0 <= P\n")
        assert cli("consistent", "--theory", theory)[1][-1] == "FORCED-ZERO none"

    def test_inconsistent_extended(self, cli, write):
        theory = write("t.rvl", "1 <= P\nP <= 0\n")
        code, out, _ = cli("consistent", "--extended", "--theory", theory)
        assert code == 1
        assert out[0] == "RESULT inconsistent"
        assert out[1].startswith("BRANCH . INFEASIBLE CERT ")

    def test_consistent_extended(self, cli, write):
        theory = write("t.rvl", "1/2*1 <= P\n")
        code, out, _ = cli("consistent", "--extended", "--theory", theory)
        assert code == 0
        assert out[0] == "RESULT consistent"
        assert out[1].startswith("MODEL P = ")
        assert len(out) == 2

    def test_unit(self, cli):
        assert cli("unit", "--extended", "--formula", "P", "--unit", "1")[:2] == (0, ["RESULT unit 1"])

    def test_no_unit(self, cli):
        assert cli("unit", "--formula", "P", "--unit", "Q")[:2] == (1, ["RESULT no-unit"])

    def test_archimedean_pair(self, cli, write):
        theory = write("t.rvl", "0 <= Q\nQ <= 0\n0 <= P\n")
        code, out, _ = cli("archimedean", "--theory", theory, "--formula", "Q", "--bound", "P")
        assert code == 0
        assert out == ["RESULT archimedean holds", "FORALL true", "NEGATIVE true", "ZERO-INSTANCE true"]

    def test_archimedean_without_theory(self, cli):
        code, out, _ = cli("archimedean", "--formula", "Q", "--bound", "P")
        assert code == 0
        assert out == ["RESULT archimedean holds", "FORALL false", "NEGATIVE n/a", "ZERO-INSTANCE false"]


class TestLuk:
    """Integration tests for the luk subcommand."""

    def test_valid(self, cli):
        code, out, _ = cli("luk", "--formula", "(A -> B) -> ((B -> C) -> (A -> C))")
        assert code == 0
        assert out[0] == "RESULT valid"
        assert out[1].startswith("TRANSLATION ")
        assert len(out) == 2

    def test_invalid(self, cli):
        code, out, _ = cli("luk", "--formula", "A")
        assert code == 1
        assert out[:2] == ["RESULT invalid", "TRANSLATION A"]
        assert out[2].startswith("MODEL A = ")

    def test_continuous_convention(self, cli):
        assert cli("luk", "--formula", "A -. A", "--convention", "cont")[0] == 0
        assert cli("luk", "--formula", "A -> A", "--convention", "cont")[0] == 1

    def test_parse_error(self, cli):
        code, _, err = cli("luk", "--formula", "A ->")
        assert code == 2
        assert "found end of input" in err


class TestLoggingFlags:
    """Test suite for --verbose and --log-file."""

    def test_silent_by_default(self, cli):
        assert cli("normalize", "--formula", "P")[2] == ""

    def test_verbose(self, cli):
        code, out, err = cli("normalize", "--formula", "P", "--verbose")
        assert out == ["NORMAL P"]
        assert "Command started: normalize" in err
        assert "Command completed: normalize, exit code 0" in err

    def test_log_file(self, cli, tmp_path):
        log = tmp_path / "run.log"
        cli("unit", "--formula", "P", "--unit", "Q", "--log-file", str(log))
        content = log.read_text()
        assert "Command completed: unit, exit code 1" in content
        assert "Output: RESULT no-unit" in content

    def test_errors_are_logged(self, cli, tmp_path):
        log = tmp_path / "run.log"
        cli("decide", "--goal", "P <= 1", "--log-file", str(log))
        assert "Command failed: decide - ModeError" in log.read_text()


class TestCommandsThroughRunner:
    """Run command handlers directly with a capturing channel."""

    def test_normalize_handler(self, runner_factory):
        runner, channel = runner_factory(commands_app, "normalize", {"formula": "P + P"})
        assert runner.run() == 0
        assert channel.output_lines == ["NORMAL 2P"]

    def test_unit_handler_reports_exit_code(self, runner_factory):
        runner, channel = runner_factory(commands_app, "unit", {"formula": "P", "unit": "1", "extended": True})
        assert runner.run() == 0
        assert channel.output_lines == ["RESULT unit 1"]
