"""Exception types shared across the package."""


class RingCodesError(Exception):
    """Base class for errors raised by this package."""


class ContextMismatchError(RingCodesError, ValueError):
    """Operands belong to different fields or rings."""


class NotADivisorError(RingCodesError, ValueError):
    """An argument was required to divide the ring modulus but does not."""


class NotADivisorBasisError(RingCodesError, ValueError):
    """A matrix whose rows must form a basis of divisors fails the check."""


class BudgetExceededError(RingCodesError, RuntimeError):
    """An exhaustive operation would exceed its configured work budget."""

    def __init__(self, message, bound=None):
        super().__init__(message)
        self.bound = bound


class InvariantViolationError(RingCodesError, AssertionError):
    """A certified postcondition failed; indicates a bug, not bad input."""


class CodeFileError(RingCodesError, ValueError):
    """A code description file could not be parsed or validated."""

    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", column {column}" if column else "") + ")"
        super().__init__(message + loc)
        self.line = line
        self.column = column
