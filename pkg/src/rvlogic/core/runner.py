"""Command execution engine.

The Runner brings together an App (command registry) and a Channel (output
sink). Each Runner instance executes a single command:
- Generates a unique run ID
- Logs the command lifecycle on a per-run child logger
- Invokes the handler with the channel's initial state
- Provides report/error utilities that delegate to the channel
"""
from __future__ import annotations

import logging
import uuid
from typing import NoReturn

from rvlogic.core.app import App, Handler
from rvlogic.core.domain import Channel, CommandFailedError


class Runner:
    """Executes one command with its settings and reports through a channel.

    Attributes:
        id: Unique 8-character hex identifier for this run.
        channel: The Channel naming the command and receiving its report.
        app: The App containing registered commands.
        logger: Per-run logger, a child of the "rvlogic" logger.
    """

    def __init__(self, app: App, channel: Channel) -> None:
        self.id: str = uuid.uuid4().hex[:8]
        self.channel = channel
        self.app = app
        self.logger = logging.getLogger(f"rvlogic.run.{self.id}")
        self.logger.debug(f"Runner initialized: run_id={self.id}, command={self.command_name}, channel={channel.type}")

    @property
    def command_name(self) -> str:
        return self.channel.command_name

    @property
    def command(self) -> Handler:
        return self.app.get_command(self.command_name)

    def run(self) -> int:
        """Execute the command and return its exit code.

        Raises:
            Exception: Any exception raised by the handler is logged and re-raised.
        """
        state = {**self.channel.initial_state, "run_id": self.id, "command": self.command_name}
        self.logger.info(f"Command started: {self.command_name}")
        self.logger.debug(f"Settings: {state}")
        try:
            code = self.command(self, state)
        except Exception as e:
            self.logger.error(f"Command failed: {self.command_name} - {type(e).__name__}: {e}")
            raise
        self.logger.info(f"Command completed: {self.command_name}, exit code {code}")
        return code

    def emit(self, line: str) -> None:
        """Send one report line through the channel."""
        self.logger.debug(f"Output: {line}")
        self.channel.report_output(self.id, line)

    def report_error(self, message: str) -> None:
        self.logger.error(f"Error reported: {message}")
        self.channel.report_error(self.id, message)

    def fail(self, message: str) -> NoReturn:
        """Abort the command.

        Raises:
            CommandFailedError: Always.
        """
        self.logger.error(f"Command fatal error: {message}")
        raise CommandFailedError(message)
