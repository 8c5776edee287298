"""Core command execution tests.

Tests the registry's name mapping, running a handler through a Runner,
failure propagation and unknown-command resolution.
"""
import pytest

from rvlogic.core.domain import CommandFailedError, State


class TestCommands:
    """Test suite for command registration and execution."""

    def test_single_command(self, app, runner_factory):
        """Test that a handler's report lines and exit code come back through the runner."""

        @app.command
        def echo(runner, state: State) -> int:
            runner.emit(f"VALUE {state['value']}")
            return 0

        runner, source = runner_factory(app, "echo", {"value": "3/2"})
        assert runner.run() == 0
        assert source.output_lines == ["VALUE 3/2"]

    def test_underscores_become_dashes(self, app):
        """Test that check_proof registers as check-proof."""

        @app.command
        def check_proof(runner, state: State) -> int:
            return 0

        assert list(app.commands) == ["check-proof"]
        assert app.get_command("check-proof").__name__ == "check_proof"

    def test_explicit_name(self, app):
        """Test that a handler named eval_ can register as eval."""

        @app.command(name="eval")
        def eval_(runner, state: State) -> int:
            return 0

        assert list(app.commands) == ["eval"]
        assert app.get_command("eval").__name__ == "eval_"

    def test_state_carries_run_id_and_command(self, app, runner_factory):
        """Test that the handler sees the run id and command name in its state."""
        seen: list[State] = []

        @app.command
        def inspect_state(runner, state: State) -> int:
            seen.append(state)
            return 1

        runner, _ = runner_factory(app, "inspect-state", {"extended": True})
        assert runner.run() == 1
        assert seen[0]["run_id"] == runner.id
        assert seen[0]["command"] == "inspect-state"
        assert seen[0]["extended"] is True

    def test_failure(self, app, runner_factory):
        """Test that fail() raises CommandFailedError after the error is reported."""

        @app.command
        def blow_up(runner, _state: State) -> int:
            runner.report_error("something broke")
            runner.fail("Command failed")

        runner, source = runner_factory(app, "blow-up")
        with pytest.raises(CommandFailedError, match="Command failed"):
            runner.run()
        assert source.error_messages == ["something broke"]

    def test_handler_exception_propagates(self, app, runner_factory):
        """Test that exceptions raised by a handler reach the caller unchanged."""

        @app.command
        def explode(runner, _state: State) -> int:
            raise ValueError("bad input")

        runner, _ = runner_factory(app, "explode")
        with pytest.raises(ValueError, match="bad input"):
            runner.run()

    def test_unknown_command(self, app, runner_factory):
        """Test that running an unregistered command raises ValueError."""
        runner, _source = runner_factory(app, "nonexistent")
        with pytest.raises(ValueError, match="Unknown command: nonexistent"):
            runner.run()

    def test_run_ids_are_unique(self, app, runner_factory):
        """Test that every runner gets its own 8-character hex id."""
        ids = {runner_factory(app)[0].id for _ in range(20)}
        assert len(ids) == 20
        assert all(len(run_id) == 8 and int(run_id, 16) >= 0 for run_id in ids)
