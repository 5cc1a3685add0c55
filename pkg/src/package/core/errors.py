class ConfigurationError(ValueError):
    """Raised when a configuration, a parameter or a flag combination is invalid."""


class PoleCollisionError(ValueError):
    """Raised when a Stieltjes-type sum is evaluated at (or too close to) one of its poles."""


class RootCountError(ValueError):
    """Raised when a root extraction does not return the expected number of distinct roots."""


class BracketError(RuntimeError):
    """Raised when an exterior root cannot be bracketed, which signals corrupted input."""
