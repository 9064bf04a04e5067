"""Exception types raised across the package."""


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position at fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class GraphSizeError(ValueError):
    pass


class PreconditionError(ValueError):
    """An operation was called outside the class it is defined on."""


class StructuralViolation(RuntimeError):
    """A structural claim that should be impossible was observed.

    Raised when a constructive procedure reaches a branch its correctness
    argument rules out, or a post-step re-verification fails.  Seeing one means
    either a bug here or a counterexample to the underlying claim.
    """


class UnsupportedError(ValueError):
    pass


class SettledQuery(ValueError):
    """A counterexample search was asked about a case already decided."""
