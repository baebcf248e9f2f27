"""Exception types shared across the package."""


class DegeneratePatternError(ValueError):
    """Raised when an element pattern has zero radiated self-power."""


class DegenerateChannelError(ValueError):
    """Raised when a channel matrix has zero mean entry power."""


class SingularityError(ValueError):
    """Raised when a Green's function is evaluated at coincident points."""


class NumericalError(RuntimeError):
    """Raised when a numerical precondition fails beyond tolerance.

    Example: a correlation matrix whose smallest eigenvalue is more
    negative than the PSD clamp threshold.
    """


class ConfigError(ValueError):
    """Raised for invalid sweep configurations; message names the key."""
