"""Exception hierarchy.

Everything raised on purpose by the package derives from :class:`InflBetaError`,
so callers (and the command line) can separate bad input from failed
estimation.
"""


class InflBetaError(Exception):
    """Base class for package errors."""


class DomainError(InflBetaError, ValueError):
    """A parameter or argument lies outside the function's domain."""


class DataError(InflBetaError, ValueError):
    """Malformed or out-of-range input data."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class SupportError(DataError):
    """A value is valid in [0, 1] but not in the support of the chosen family."""


class EstimationError(InflBetaError):
    """An estimator could not produce a value inside the parameter space."""


class BoundaryEstimateError(EstimationError):
    """A closed-form estimate landed on the boundary of the parameter space."""


class InsufficientDataError(EstimationError):
    """Too few interior observations for the requested estimator."""


class MomentError(EstimationError):
    """The conditional-moment equations have no admissible solution."""


class OptimizationError(EstimationError):
    """The optimizer stopped without meeting its convergence criterion."""

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result
