"""Exception types shared across the package."""


class PermutipleError(Exception):
    """Base class for domain errors raised by this package."""


class DigitAlignmentError(PermutipleError):
    """A digit pairing does not admit a valid carry sequence."""


class RejectedPairError(PermutipleError):
    """A digit pair fails the residue inequality, so no transition exists."""


class NotAnLWalkError(PermutipleError):
    """A pair string does not walk from the zero carry state back to it."""


class UnknownCycleIndexError(PermutipleError):
    """A cycle index lies outside the canonical cycle inventory."""


class CapExceededError(PermutipleError):
    """An enumeration produced more results than the configured cap allows."""


class BudgetExceededError(PermutipleError):
    """A brute-force scan would touch more candidates than the budget allows."""
