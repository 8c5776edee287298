"""CLI channel implementation.

Report lines go to stdout exactly as produced, so output is deterministic
byte for byte; diagnostics go to stderr prefixed with "Error: ".
"""
import logging
import sys

from rvlogic.core.domain import State

logger = logging.getLogger("rvlogic.channels.cli")


class CliChannel:
    """Channel adapter for command-line runs.

    Attributes:
        type: Always "cli".
        command_name: The subcommand being executed.
        initial_state: Settings parsed from the command line.
    """

    def __init__(self, command_name: str, initial_state: State | None = None) -> None:
        self.type = "cli"
        self.command_name = command_name
        self.initial_state: State = {**(initial_state or {})}
        logger.debug(f"CliChannel initialized: command_name={command_name}")

    def report_output(self, run_id: str, line: str) -> None:
        print(line, flush=True)

    def report_error(self, run_id: str, message: str) -> None:
        logger.debug(f"Error [{run_id}]: {message}")
        print(f"Error: {message}", file=sys.stderr, flush=True)
