"""Command-line interface for rvlogic.

Parses the subcommand and its flags, configures logging, and runs the
matching command from rvlogic.commands through a CliChannel. Exit codes:
0 positive verdict, 1 negative verdict, 2 usage, parse or input errors.
"""
import argparse
import logging
import sys

from rvlogic.channels.cli import CliChannel
from rvlogic.commands import app
from rvlogic.core.domain import CommandFailedError
from rvlogic.core.errors import RvlError
from rvlogic.core.runner import Runner

logger = logging.getLogger("rvlogic.cli")

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s - %(message)s"
CLI_ONLY = ("command", "verbose", "log_file")


def configure_logging(verbose: bool, log_file: str | None) -> None:
    """Attach handlers to the "rvlogic" logger; silent unless asked."""
    root = logging.getLogger("rvlogic")
    root.handlers.clear()
    formatter = logging.Formatter(LOG_FORMAT)
    if verbose:
        stream = logging.StreamHandler(sys.stderr)
        stream.setFormatter(formatter)
        root.addHandler(stream)
    if log_file:
        file_handler = logging.FileHandler(log_file)
        file_handler.setFormatter(formatter)
        root.addHandler(file_handler)
    if not root.handlers:
        root.addHandler(logging.NullHandler())
    root.setLevel(logging.DEBUG if verbose or log_file else logging.WARNING)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--verbose", action="store_true", help="log to stderr at DEBUG level")
    common.add_argument("--log-file", default=None, help="also write the log to this file")

    logic = argparse.ArgumentParser(add_help=False, parents=[common])
    logic.add_argument("--extended", action="store_true", help="extended case: constant 1, letters in [-1, 1]")

    parser = argparse.ArgumentParser(prog="rvlogic", description="Real-valued propositional logic.")
    subparsers = parser.add_subparsers(dest="command")

    decide = subparsers.add_parser("decide", parents=[logic], help="decide T ⊨ goal")
    decide.add_argument("--theory", default=None)
    decide.add_argument("--goal", required=True)
    decide.add_argument("--certificate", action="store_true", help="also print branches when not entailed")
    decide.add_argument("--countermodel", action="store_true", help="print the countermodel when not entailed")
    decide.add_argument("--prune", action="store_true")

    evaluate = subparsers.add_parser("eval", parents=[logic], help="evaluate a formula in a model")
    evaluate.add_argument("--model", required=True)
    evaluate.add_argument("--formula", required=True)
    evaluate.add_argument("--poly", action="store_true", help="model values are polynomials in x")

    normalize = subparsers.add_parser("normalize", parents=[logic], help="linear normal form")
    normalize.add_argument("--formula", required=True)

    regions = subparsers.add_parser("regions", parents=[logic], help="guarded linear pieces")
    regions.add_argument("--formula", required=True)
    regions.add_argument("--prune", action="store_true")

    check_proof = subparsers.add_parser("check-proof", parents=[common], help="check a proof file")
    check_proof.add_argument("proof")
    check_proof.add_argument("--fragment", choices=["mp", "lin", "full"], default=None)

    transform = subparsers.add_parser("transform", parents=[common], help="deduction transform or cut elimination")
    transform.add_argument("proof")
    transform.add_argument("--hyp", type=int, default=None, help="hypothesis to discharge, 1-based")
    transform.add_argument("--cut-with", default=None, help="proof file from the negated hypothesis")
    transform.add_argument("--fragment", choices=["mp", "lin", "full"], default=None)

    consistent = subparsers.add_parser("consistent", parents=[logic], help="consistency of a theory")
    consistent.add_argument("--theory", required=True)

    luk = subparsers.add_parser("luk", parents=[common], help="Łukasiewicz validity")
    luk.add_argument("--formula", required=True)
    luk.add_argument("--convention", choices=["luk", "cont"], default="luk")

    unit = subparsers.add_parser("unit", parents=[logic], help="least r with T ⊨ formula <= r·unit")
    unit.add_argument("--theory", default=None)
    unit.add_argument("--formula", required=True)
    unit.add_argument("--unit", required=True)

    archimedean = subparsers.add_parser("archimedean", parents=[logic], help="Archimedean check for a pair")
    archimedean.add_argument("--theory", default=None)
    archimedean.add_argument("--formula", required=True)
    archimedean.add_argument("--bound", required=True)
    return parser


def main(argv: list[str] | None = None) -> None:
    """Main entry point for the rvlogic CLI.

    Examples:
        rvlogic decide --theory t.rvl --goal "0 <= P"
        rvlogic eval --model m.rvl --formula "min(P, Q)"
        rvlogic check-proof proof.rvp
        rvlogic transform proof.rvp --hyp 2
        rvlogic luk --formula "(A -> B) -> ((B -> C) -> (A -> C))"

    Raises:
        SystemExit: With the command's exit code.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help()
        sys.exit(0)

    configure_logging(args.verbose, args.log_file)
    logger.debug(f"CLI args parsed: command={args.command}")
    state = {key: value for key, value in vars(args).items() if key not in CLI_ONLY}
    runner = Runner(app, CliChannel(args.command, state))
    try:
        code = runner.run()
    except (RvlError, OSError, CommandFailedError) as e:
        runner.report_error(str(e))
        sys.exit(2)
    sys.exit(code)


if __name__ == "__main__":
    main()
