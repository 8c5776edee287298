"""Command registry for the rvlogic subcommands.

This module provides:
- App: Central registry for command handlers with decorator-based registration

A command handler receives the Runner executing it and the per-invocation
State, writes its report through runner.emit(), and returns the exit code
(0 positive verdict, 1 negative verdict).
"""
from __future__ import annotations

import functools
from typing import TYPE_CHECKING, Callable

from rvlogic.core.domain import State

if TYPE_CHECKING:
    from rvlogic.core.runner import Runner

type Handler = Callable[[Runner, State], int]


class App:
    """Central registry for command handlers.

    Example:
        >>> app = App()
        >>> @app.command
        ... def check_proof(runner: Runner, state: State) -> int:
        ...     runner.emit("PROOF ok")
        ...     return 0
        >>> sorted(app.commands)
        ['check-proof']

    Attributes:
        commands: Dictionary mapping command names to their handlers.
    """

    def __init__(self) -> None:
        self.commands: dict[str, Handler] = {}

    def command(self, fn: Handler | None = None, *, name: str | None = None) -> Handler | Callable[[Handler], Handler]:
        """Register a function as a command handler.

        The registry key is the function name with underscores turned into
        dashes, so check_proof answers to "check-proof". Use
        @app.command(name="eval") when the function name cannot be the
        command name.

        Args:
            fn: A callable accepting a Runner and State and returning an exit code.
            name: Explicit command name.

        Returns:
            The wrapped handler, or a decorator when called with name only.
        """
        if fn is None:
            return functools.partial(self.command, name=name)

        @functools.wraps(fn)
        def wrapper(runner: Runner, state: State) -> int:
            return fn(runner, state)

        self.commands[name or fn.__name__.replace("_", "-")] = wrapper
        return wrapper

    def get_command(self, name: str) -> Handler:
        """Retrieve a registered handler by command name.

        Raises:
            ValueError: If no command with the given name is registered.
        """
        try:
            return self.commands[name]
        except KeyError:
            raise ValueError(f"Unknown command: {name}")
