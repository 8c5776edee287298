"""Shared pytest fixtures and test utilities.

This module provides test doubles and factory fixtures for running rvlogic
commands without touching stdout.
"""
import logging

import pytest

from rvlogic.core.app import App
from rvlogic.core.domain import State
from rvlogic.core.runner import Runner


class TestChannel:
    """In-memory test double for command channels.

    Captures report lines and error messages, enabling verification of
    command output in tests.
    """

    def __init__(self, command_name: str, initial_state: State | None = None) -> None:
        self.type = "test"
        self.command_name = command_name
        self.initial_state: State = initial_state or {}
        self.output_lines: list[str] = []
        self.error_messages: list[str] = []

    def report_output(self, run_id: str, line: str) -> None:
        self.output_lines.append(line)

    def report_error(self, run_id: str, message: str) -> None:
        self.error_messages.append(message)


@pytest.fixture(autouse=True)
def restore_package_logger():
    """Undo handlers and level changes made to the "rvlogic" logger by a test."""
    root = logging.getLogger("rvlogic")
    handlers, level = list(root.handlers), root.level
    yield
    for handler in root.handlers:
        if handler not in handlers:
            handler.close()
    root.handlers[:] = handlers
    root.setLevel(level)


@pytest.fixture
def app():
    """Provide a fresh, empty App."""
    return App()


@pytest.fixture
def runner_factory(app):
    """Factory fixture for creating runners with capturing channels.

    Returns:
        Callable: Factory function that creates (Runner, TestChannel) tuples.
    """

    def _create(test_app: App | None = None, command_name: str = "test", initial_state: State | None = None):
        source = TestChannel(command_name, initial_state)
        runner = Runner(test_app or app, source)
        return runner, source

    return _create
