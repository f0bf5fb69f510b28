"""Exception hierarchy shared by every module.

Each class carries the CLI exit code it maps to, so the front end never has
to translate error types by hand.
"""


class LangRepError(Exception):
    exit_code = 1


class InvalidArgumentsError(LangRepError, ValueError):
    exit_code = 2


class SpecSyntaxError(LangRepError, ValueError):
    exit_code = 2


class InputFormatError(LangRepError, ValueError):
    exit_code = 2


class OracleMisuseError(InvalidArgumentsError):
    """Decoding with a language that is not 0-1-symmetric."""

    exit_code = 3


class ClassViolationError(InvalidArgumentsError):
    """A graph (or witness) does not belong to the class an encoder needs."""

    exit_code = 4


class ResourceLimitError(LangRepError):
    exit_code = 5
