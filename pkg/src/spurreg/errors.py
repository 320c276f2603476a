"""Exception types shared across the package."""


class SpurregError(Exception):
    """Base class for all domain errors raised by this package."""


class ParameterError(SpurregError, ValueError):
    """An argument or specification violates a documented invariant."""


class SingularMatrixError(SpurregError):
    """Design matrix is rank deficient at the stated tolerance."""


class DegreesOfFreedomError(SpurregError):
    """Too few observations for the requested fit."""


class DegenerateDataError(SpurregError):
    """Data admit no meaningful statistic (zero variance, all-zero residuals...)."""


class DataLoadError(SpurregError):
    """A dataset file is missing, malformed, or incomplete."""


class NumericalQualityError(SpurregError):
    """A simulation exceeded its numerical-failure budget."""
