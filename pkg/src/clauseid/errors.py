"""Exception types shared across the package.

Every error raised for bad input data derives from :class:`ClauseError`,
which lets callers (and the command-line front end) separate data problems
from programming errors.
"""


class ClauseError(Exception):
    """Base class for data errors."""


class FormatError(ClauseError, ValueError):
    """Malformed corpus file."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class EmptyCorpusError(FormatError):
    pass


class LayoutError(ClauseError, ValueError):
    """Column layout is inconsistent with the data or with itself."""


class TagSyntaxError(ClauseError, ValueError):
    def __init__(self, text, expected="bracket tag"):
        super().__init__(f"invalid {expected}: {text!r}")
        self.text = text


class BalanceError(ClauseError, ValueError):
    """Bracket tags of a sentence do not form a balanced sequence."""

    def __init__(self, report):
        super().__init__(report.message)
        self.report = report


class NestingError(ClauseError, ValueError):
    """Two clause spans cross each other."""

    def __init__(self, first, second):
        super().__init__(f"crossing spans {tuple(first)} and {tuple(second)}")
        self.pair = (first, second)


class TreeParseError(ClauseError, ValueError):
    def __init__(self, message, offset):
        super().__init__(f"offset {offset}: {message}")
        self.offset = offset


class EmptySentenceError(ClauseError, ValueError):
    pass


class AlignmentError(ClauseError, ValueError):
    """Gold and predicted data are not segmented identically."""

    def __init__(self, message, sentence=None):
        if sentence is not None:
            message = f"sentence {sentence}: {message}"
        super().__init__(message)
        self.sentence = sentence


class InputError(ClauseError, ValueError):
    pass
