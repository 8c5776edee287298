"""Channels: where a command's report lines and errors go."""

from rvlogic.channels.cli import CliChannel

__all__ = ["CliChannel"]
