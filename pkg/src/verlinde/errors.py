"""Domain errors shared across the package.

Every error raised for bad mathematical input derives from VerlindeError,
so callers (and the command line front end) can catch one type.  The name
of the concrete class identifies the failure.
"""


class VerlindeError(ValueError):
    """Base class for all domain errors raised by this package."""


class InvalidType(VerlindeError):
    """Unknown series letter or rank outside the allowed range."""


class InvalidLevel(VerlindeError):
    """Negative fusion level."""


class LevelZero(VerlindeError):
    """Operation needs a positive fusion level."""


class LevelOverflow(VerlindeError):
    """Weight level exceeds the bound imposed by the ring."""


class LevelBelowDualCoxeter(VerlindeError):
    """Twist level is smaller than the dual Coxeter number."""


class NotDominant(VerlindeError):
    """Weight has a negative Dynkin label where a dominant one is required."""


class ContextMismatch(VerlindeError):
    """Operands belong to fusion rings with different type or level."""


class RankTooLarge(VerlindeError):
    """Numerical Weyl-sum routine invoked above its rank cap."""


class NonIntegralOracle(VerlindeError):
    """Verlinde-formula sum failed to round to a non-negative integer."""


class SingularPoint(VerlindeError):
    """Weyl denominator vanishes at the requested evaluation point."""
