"""Exception types shared across the package."""


class EllisemError(Exception):
    pass


class ParseError(EllisemError):
    """Input file is malformed.  Carries a 1-based line number when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(EllisemError):
    """An operation was called on input violating its stated precondition."""


class ConsistencyError(EllisemError):
    """Two independent computations of the same fact disagree.

    This is never caught and reconciled silently; it aborts the analysis
    (CLI exit code 2).
    """


class ShadowUndefinedError(EllisemError):
    """The fiber shadow cannot be represented as maps on the seed set.

    Raised when a recurring column, after composition with the recurrent
    powers of the first-coordinate column map, takes a value that is not a
    seed letter (the value then belongs to a periodic, non-fixed orbit of
    the shift-substitution map, outside the model this package computes).
    """


class ShadowBlindSpotError(EllisemError):
    """A fact about the full system is not realized inside the computed
    fiber shadow (e.g. the separating element promised by a Li-Yorke pair
    does not preserve the distinguished fiber)."""


class KernelModelUnavailable(EllisemError):
    """The explicit kernel product model only applies when the fiber kernel
    is a left-zero semigroup of constant maps; otherwise we decline."""
