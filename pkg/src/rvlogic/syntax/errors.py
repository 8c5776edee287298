"""Parse error types."""
from dataclasses import dataclass

from rvlogic.core.errors import RvlError


@dataclass(frozen=True, slots=True)
class SourceSpan:
    """Location of a token: 1-based line and column, length in characters."""

    line: int
    column: int
    length: int

    def __str__(self) -> str:
        return f"{self.line}:{self.column}"


class ParseError(RvlError):
    """Raised on malformed formulas, theory files, model files and proof files.

    Attributes:
        span: Where the offending input starts.
        detail: The message without location prefix.
    """

    def __init__(self, detail: str, span: SourceSpan) -> None:
        super().__init__(f"{span}: {detail}")
        self.detail = detail
        self.span = span
