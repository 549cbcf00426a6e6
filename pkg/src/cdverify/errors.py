"""Exception hierarchy shared by all cdverify modules."""


class CdVerifyError(Exception):
    """Base class for every error raised by this package."""


class FactorizationTimeout(CdVerifyError):
    pass


class MagnitudeExceeded(CdVerifyError):
    pass


class NotPrime(CdVerifyError, ValueError):
    pass


class UndefinedCase(CdVerifyError, ValueError):
    pass


class ParseError(CdVerifyError, ValueError):
    """Malformed text.  ``pos`` is a 0-based offset into the input."""

    def __init__(self, message, text="", pos=0):
        self.text = text
        self.pos = pos
        self.line = text.count("\n", 0, pos) + 1
        self.column = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} (line {self.line}, column {self.column})")


class InvalidParameters(CdVerifyError, ValueError):
    pass


class NotSimple(CdVerifyError, ValueError):
    pass


class NotLieType(CdVerifyError, ValueError):
    pass


class NotExceptional(CdVerifyError, ValueError):
    pass


class ExceptionListed(CdVerifyError, ValueError):
    """The group sits in the exception column of the LSZ table."""


class RowMissing(CdVerifyError, KeyError):
    pass


class UnknownWitness(CdVerifyError, KeyError):
    pass


class UnknownSporadic(CdVerifyError, KeyError):
    pass


class CapExceeded(CdVerifyError, ValueError):
    pass


class DuplicateId(ParseError):
    pass


class UnboundParameter(ParseError):
    pass


class EvaluationError(CdVerifyError):
    pass
