"""Exception hierarchy for the toolkit."""


class TipsimError(Exception):
    """Base class for all toolkit errors."""


class GeometryError(TipsimError):
    """Invalid electrode geometry (overlaps, bad ordering, bad dimensions)."""


class ConvergenceError(TipsimError):
    """Iterative solve did not reach the requested tolerance."""

    def __init__(self, message, residual=None, iterations=None):
        super().__init__(message)
        self.residual = residual
        self.iterations = iterations


class OutOfDomainError(TipsimError):
    """Query point lies inside an electrode or outside the solved domain."""


class TrajectoryError(TipsimError):
    """Trajectory precondition violated or undefined derived quantity."""


class FitError(TipsimError):
    """Nonlinear fit failed or input data degenerate."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class FrequencySearchError(TipsimError):
    """No candidate dephasing frequency matches the pair-correlation data."""


class ConfigError(TipsimError):
    """Config file unreadable, unparseable, or invariant-violating."""
