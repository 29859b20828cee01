class FiltratedKError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(FiltratedKError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class NotAPartialOrder(FiltratedKError):
    pass


class UnknownElement(FiltratedKError):
    pass


class NotLocallyClosed(FiltratedKError):
    pass


class EmptyChain(FiltratedKError):
    pass


class NotWellDefined(FiltratedKError):
    pass


class ObjectMismatch(FiltratedKError):
    pass


class ModuleValidationError(FiltratedKError):
    pass


class ResolutionTruncated(FiltratedKError):
    pass


class SpecMismatch(FiltratedKError):
    pass


class NotAnExtension(FiltratedKError):
    pass


class RingValidationError(FiltratedKError):
    pass
