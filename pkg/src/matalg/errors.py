"""Exception hierarchy shared by every module."""


class MatalgError(Exception):
    """Base class for all errors raised by matalg."""


class DomainMismatch(MatalgError):
    pass


class DimensionMismatch(MatalgError):
    pass


class InputError(MatalgError):
    """Malformed job, descriptor or scalar."""


class InconclusiveError(MatalgError):
    """A decision procedure could not reach a verdict (never guessed)."""


class CapExceeded(MatalgError):
    def __init__(self, cap, message=None):
        self.cap = cap
        super().__init__(message or f"semigroup closure exceeded cap of {cap} elements")


class SingularMatrix(MatalgError):
    pass


class RankOneNotFound(MatalgError):
    def __init__(self, min_rank, message=None):
        self.min_rank = min_rank
        super().__init__(message or f"no rank-one element found; smallest rank seen {min_rank}")


class HypothesisViolation(MatalgError):
    """An operation's mathematical precondition turned out to be false."""
