"""Exception hierarchy shared by every module."""


class SchreierError(Exception):
    """Base class for computation errors raised by schreierkit."""


class InvalidArgument(SchreierError, ValueError):
    pass


class NotRACG(SchreierError):
    """A presentation is not the standard presentation of a right-angled Coxeter group."""

    def __init__(self, message, relator=None):
        super().__init__(message)
        self.relator = relator


class QuotientIllDefined(SchreierError):
    """The exponent-sum-mod-2 map does not kill every relator."""


class NotInSubgroup(SchreierError):
    pass


class NotEliminable(SchreierError):
    pass


class IndexTooLarge(SchreierError):
    pass


class ParseError(SchreierError):
    """Malformed word text or presentation document."""
