"""Exception hierarchy shared by every module of the package."""


class StoneError(Exception):
    """Base class for all errors raised by stonedual."""


class MalformedDescriptor(StoneError, ValueError):
    pass


class ForeignElement(StoneError, ValueError):
    pass


class DomainMismatch(StoneError, ValueError):
    pass


class NotASubset(StoneError, ValueError):
    pass


class NotClopen(StoneError, ValueError):
    pass


class NotOpen(StoneError, ValueError):
    pass


class UnrepresentableCO(StoneError):
    """The clopen algebra of a space lies outside the representable backends."""


class UnrepresentableIdeal(StoneError):
    pass


class FiniteSupportOnNonFcBlock(StoneError, ValueError):
    pass


class EnumerationUnsupported(StoneError):
    pass


class FiniteBackendOnly(StoneError):
    pass


class NotValidated(StoneError):
    """A functor was handed an object that fails its category's axioms."""

    def __init__(self, message, verdict=None):
        super().__init__(message)
        self.verdict = verdict


class NotZlba(NotValidated):
    pass


class LbaConditionFailed(StoneError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ParseError(StoneError):
    def __init__(self, message, line=None, column=None):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class ValidationError(StoneError):
    def __init__(self, message, which=None):
        super().__init__(message)
        self.which = which
