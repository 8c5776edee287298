"""Entry point for `python -m rvlogic`; delegates to the CLI."""
from rvlogic.cli import main

if __name__ == "__main__":
    main()
