class ParameterError(ValueError):
    """Raised when an argument lies outside its admissible range."""


class DimensionError(ValueError):
    """Raised when two signals live on groups of different order."""


class InvariantViolation(RuntimeError):
    """A proved inequality failed numerically. Always indicates a bug."""
