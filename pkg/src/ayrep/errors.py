"""Exception types shared across the package."""


class AyrepError(Exception):
    """Base class for package-specific errors."""


class SizeCapError(AyrepError):
    """A requested enumeration exceeds the configured group-size cap."""


class EmptyShapeError(AyrepError):
    """A shape with no boxes was passed where boxes are required."""


class NotStandardError(AyrepError):
    """A tableau expected to be standard is not."""


class ContentVectorError(AyrepError):
    """A sequence is not the content vector of any standard skew tableau.

    `pair` holds the violating index pair (1-based) when known.
    """

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class GenericityError(AyrepError):
    """A functional violates one of the cell-genericity conditions.

    `condition` is "interior", "boundary" or "corner".
    """

    def __init__(self, message, condition):
        super().__init__(message)
        self.condition = condition


class PreconditionError(AyrepError):
    """An operation was called outside its documented domain."""
