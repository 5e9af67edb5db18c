"""Exception hierarchy shared across the package."""

from fractions import Fraction


class StochexError(Exception):
    """Base class for all package errors."""


class DimensionMismatch(StochexError):
    pass


class ProbabilityNotOne(StochexError):
    """Atom probabilities do not sum to exactly 1; carries the exact deficit."""

    def __init__(self, deficit: Fraction):
        self.deficit = deficit
        super().__init__(f"probabilities sum to 1 - ({deficit}), deficit {deficit}")


class InvalidRational(StochexError):
    pass


class EmptyIndexSet(StochexError):
    pass


class IndexOutOfRange(StochexError):
    pass


class PrefixOutOfRange(StochexError):
    pass


class NegativeThreshold(StochexError):
    pass


class RhoOutOfRange(StochexError):
    pass


class InvalidSpec(StochexError):
    pass


class NotPositiveDefinite(StochexError):
    def __init__(self, smallest_eigenvalue: float):
        self.smallest_eigenvalue = smallest_eigenvalue
        super().__init__(
            f"matrix is not positive definite (smallest eigenvalue {smallest_eigenvalue:.6e})"
        )


class InvalidThetaOrder(StochexError):
    pass


class UnknownId(StochexError):
    pass


class EmptyGrid(StochexError):
    pass
