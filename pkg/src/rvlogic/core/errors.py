"""Error types shared across rvlogic.

Every failure raised by the library derives from RvlError so callers (the CLI
in particular) can translate any of them into a usage/parse error with a
single except clause. Verdicts such as "not entailed" or "proof rejected" are
results, not exceptions.
"""


class RvlError(Exception):
    """Base class for all rvlogic errors."""


class ModeError(RvlError):
    """Raised when a construct is not available in the current mode.

    The constant 1, nonzero numeric literals, axiom a15 and out-of-range
    model values only make sense in the extended case; the polynomial
    semantics only in the basic case.

    Example:
        >>> raise ModeError("constant 1 is not available in basic mode")
        Traceback (most recent call last):
        ...
        ModeError: constant 1 is not available in basic mode
    """


class NotLinearError(RvlError):
    """Raised when a Meet node is met while computing a linear normal form."""


class UnassignedLetterError(RvlError, LookupError):
    """Raised when a formula mentions a letter the model does not assign."""

    def __init__(self, letter: str) -> None:
        super().__init__(f"letter {letter} is not assigned")
        self.letter = letter


class CertificateShapeError(RvlError):
    """Raised when a certificate does not have one multiplier per hypothesis."""


class TransformError(RvlError):
    """Raised when a proof transformer receives a derivation of the wrong shape."""


class ProofFormatError(RvlError):
    """Raised when a proof file cannot be read."""

    def __init__(self, message: str, line: int) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line
