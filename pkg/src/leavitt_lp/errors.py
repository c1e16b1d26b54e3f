"""Exception hierarchy shared across the package."""


class LeavittError(Exception):
    """Base class for domain errors raised by this package."""


class AlphabetMismatchError(LeavittError):
    """Operands were built over different alphabet sizes d."""


class NotInCoreError(LeavittError):
    """Element has a nonzero component of degree != 0."""


class LevelError(LeavittError):
    """Requested matrix level is smaller than the element's level."""


class ExprSyntaxError(LeavittError):
    """Expression text failed to parse.

    `pos` is the 0-based offset of the offending character.
    """

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class WitnessBoundError(LeavittError):
    """Search bound exhausted before an annihilating word was found."""
