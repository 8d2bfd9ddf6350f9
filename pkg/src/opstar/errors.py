"""Exception hierarchy shared by every construction."""

from __future__ import annotations


class OPStarError(Exception):
    """Base class for all errors raised by this package."""


class InstanceTooSmall(OPStarError):
    pass


class BadInstance(OPStarError):
    pass


class BadConnectionSet(OPStarError):
    pass


class BadModulus(OPStarError):
    pass


class BadStarter(OPStarError):
    """A starter set does not cover every base-q difference exactly once."""

    def __init__(self, message: str, *, duplicated=(), missing=()):
        super().__init__(message)
        self.duplicated = tuple(duplicated)
        self.missing = tuple(missing)


class HypothesisViolated(OPStarError):
    """The parameters fall outside the range a construction is valid for."""


class SearchFailed(OPStarError):
    pass


class BadForm(OPStarError):
    pass


class CollisionDetected(OPStarError):
    pass


class OddLengthInBipartite(OPStarError):
    pass


class SizeMismatch(OPStarError):
    pass


class ConditionFailed(OPStarError):
    """A named precondition of the join construction does not hold."""

    def __init__(self, condition: str, detail: str = ""):
        super().__init__(f"condition {condition} failed: {detail}" if detail else f"condition {condition} failed")
        self.condition = condition


class CertificationError(OPStarError):
    """A construction produced output that the independent checker rejected."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report
