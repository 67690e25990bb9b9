"""Exception types shared across the package."""


class StableSpinError(Exception):
    """Base class for all package errors."""


class QuadratureError(StableSpinError):
    """A quadrature could not meet its accuracy target.

    Raised instead of silently returning an under-resolved value; carries the
    estimated error and the tolerance that was violated.
    """

    def __init__(self, message, estimate=None, tolerance=None):
        super().__init__(message)
        self.estimate = estimate
        self.tolerance = tolerance


class SimulationError(StableSpinError):
    """A simulation produced non-finite states.

    ``failures`` is a list of ``(path_index, time, sites)`` tuples; heavy-tailed
    increments can overflow a step and must be surfaced, never clamped.
    """

    def __init__(self, message, failures=()):
        super().__init__(message)
        self.failures = list(failures)


class ConfigError(StableSpinError):
    """Experiment configuration is syntactically or semantically invalid."""

    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + loc)
        self.line = line
        self.column = column
