class CodingError(ValueError):
    """Base class for every error raised by the library."""


class LengthMismatchError(CodingError):
    pass


class ParameterError(CodingError):
    pass


class MalformedInputError(CodingError):
    pass


class ZeroDivisorError(CodingError):
    """Raised when inverting an element of the maximal ideal 2R."""


class NotPrimitiveError(CodingError):
    pass


class ResourceCapError(CodingError):
    pass


class NonIntegralEnumeratorError(CodingError):
    pass
