"""rvlogic core: domain types, formula helpers, errors and command plumbing.

The core consists of:
- Formula nodes (Zero, One, Letter, Add, Meet, Scale), Inequality, Theory, Mode
- Derived connectives and sugar expansion (rvlogic.core.formulas)
- RvlError and its subclasses (rvlogic.core.errors)
- App: command registry with decorator-based registration
- Runner: executes one command against a Channel

Typical usage:
    from rvlogic.core.app import App
    from rvlogic.core.runner import Runner

    app = App()

    @app.command(name="eval")
    def eval_(runner, state):
        runner.emit("VALUE 1")
        return 0

    runner = Runner(app, CliChannel("eval", {}))
    exit_code = runner.run()
"""
