"""Exception hierarchy shared by every matflat module."""


class MatflatError(Exception):
    """Base class for all library errors."""


class NotPrimePower(MatflatError, ValueError):
    pass


class Unsupported(MatflatError, ValueError):
    pass


class DivideByZero(MatflatError, ZeroDivisionError):
    pass


class ResourceLimit(MatflatError):
    """Raised when an enumeration or construction exceeds its configured size cap."""


class LoopElement(MatflatError, ValueError):
    pass


class NotInClass(MatflatError, ValueError):
    """The matroid has a U_{2,l+2}-minor, so a U(l) bound does not apply."""


class OutOfRange(MatflatError, ValueError):
    pass


class InternalError(MatflatError, AssertionError):
    pass


class FormatError(MatflatError, ValueError):
    """Malformed matroid JSON; the message starts with the offending JSON path."""

    def __init__(self, path, message):
        self.path = path
        super().__init__(f"{path}: {message}")
