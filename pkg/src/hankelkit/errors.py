"""Exception types shared by the library and the CLI."""


class HankelKitError(Exception):
    """Base class for every error raised by this package."""


class DataError(HankelKitError, ValueError):
    """The input data cannot support the requested computation (CLI exit 3)."""


class UsageError(HankelKitError, ValueError):
    """Malformed input or arguments (CLI exit 2)."""


class DivisorNotUnit(UsageError):
    pass


class InnerNotNilpotent(UsageError):
    pass


class NotInvertible(UsageError):
    pass


class KindMismatch(UsageError):
    pass


class UnknownName(UsageError):
    pass


class IndexOutOfRange(UsageError):
    pass


class ParseError(UsageError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InsufficientTerms(DataError):
    pass


class InsufficientDepth(DataError):
    pass


class InsufficientPrecision(DataError):
    pass


class SingularMinor(DataError):
    """A leading principal Hankel minor vanished; ``index`` is the first such k."""

    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"Hankel minor h_{index} is zero; sequence is not regular through n={index}")


class NetworkError(HankelKitError):
    pass


class NotFound(HankelKitError):
    pass
