"""Exception types shared across the package."""


class RectKronError(Exception):
    """Base class for errors raised by rectkron."""


class SizeMismatchError(RectKronError, ValueError):
    """Partitions that must have equal size do not."""


class ResourceLimitError(RectKronError):
    """A request exceeds a configured computation ceiling."""


class ConsistencyError(RectKronError, ArithmeticError):
    """An internal invariant failed (non-integral multiplicity, negative count, ...).

    This always indicates a bug or corrupted data, never a valid answer.
    """
