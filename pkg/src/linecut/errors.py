"""Exception types shared across the package."""


class LinecutError(Exception):
    pass


class InvariantViolation(LinecutError):
    """An internal consistency check failed. Always a bug signal."""


class ParallelLines(LinecutError, ValueError):
    """Two input lines are parallel (or identical)."""


# Name used by the arrangement layer.
ParallelPair = ParallelLines


class SizeLimitExceeded(LinecutError, ValueError):
    pass


class SearchExhausted(InvariantViolation):
    pass


class TargetUnreachable(LinecutError):
    pass


class InfeasibleScale(LinecutError):
    pass


class NotTriangulation(LinecutError, ValueError):
    pass


class InvalidOrder(LinecutError, ValueError):
    pass


class CyclicFrame(InvariantViolation):
    pass


class InductionViolation(InvariantViolation):
    pass
