"""Exceptions raised by codedit."""


class AlphabetError(ValueError):
    """An alphabet is malformed or a word leaves its alphabet."""


class EmptyWordError(ValueError):
    """The empty word was found in a set that must be a candidate code."""


class NotACodeError(ValueError):
    """A language required to be a code is not uniquely decipherable."""


class CompleteLanguageError(ValueError):
    """An operation defined on non-complete languages got a complete one."""


class PreconditionError(ValueError):
    """Any other violated precondition of a decision procedure."""


class SearchGuardError(RuntimeError):
    """An exhaustive search would exceed its configured bound.

    Attributes
    ----------
    bound : str
        Name of the bound that tripped, e.g. ``'search nodes'``.
    limit : int
        The configured value of that bound.
    """

    def __init__(self, bound, limit, message):
        super().__init__(message)
        self.bound = bound
        self.limit = limit


class VerificationError(RuntimeError):
    """A property guaranteed by construction failed its runtime check."""


class LanguageFileError(ValueError):
    """A language file could not be parsed."""

    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno
