"""Exception types shared across the package."""


class MotwedgeError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(MotwedgeError, ValueError):
    """Malformed token, descriptor, monomial or table text."""


class UnknownName(MotwedgeError, KeyError):
    """A symbol outside the packaged tables."""

    def __str__(self):
        return Exception.__str__(self)


class DomainError(MotwedgeError, ValueError):
    """Parameters outside the range where an operation is defined."""


class RingMismatch(MotwedgeError, TypeError):
    pass


class OpaqueImage(MotwedgeError):
    """The image of a symbol under the restriction map is not known."""


class CollisionError(MotwedgeError):
    """Two distinct wedge descriptors land on the same chart position."""
