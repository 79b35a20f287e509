"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed caller input: bad dimensions, out-of-range indices, bad flags."""


class ConstructionError(ValueError):
    """A structure's defining axioms failed while building it.

    The message names the violated axiom or equation.
    """


class PreconditionError(RuntimeError):
    """An operation's precondition failed; carries the witness when available."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InternalConsistencyError(RuntimeError):
    """A mathematically guaranteed identity failed; indicates a bug or corrupt data."""
