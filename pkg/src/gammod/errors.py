"""Exception types shared across the package."""


class DomainError(Exception):
    """Base class for all mathematical domain errors (CLI exit code 1)."""


class NotCoprime(DomainError):
    pass


class BadOrder(DomainError):
    pass


class NotAGap(DomainError):
    pass


class NotInSemigroup(DomainError):
    pass


class NotIncreasing(DomainError):
    pass


class DifferenceInSemigroup(DomainError):
    pass


class TooLarge(DomainError):
    pass


class BadMode(DomainError):
    pass


class ZeroGenerator(DomainError):
    pass


class Unsolvable(DomainError):
    """Raised when forward substitution runs out of retry values."""

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace or []


class VerificationFailed(DomainError):
    """A realization did not round-trip through the valuation engine."""

    def __init__(self, message, expected=None, actual=None):
        super().__init__(message)
        self.expected = expected
        self.actual = actual


class InternalInconsistency(DomainError):
    """An imposed equation has no isolating variable and a nonzero remainder."""

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace or []


class ArityMismatch(ValueError):
    pass


class TruncationMismatch(ValueError):
    pass
