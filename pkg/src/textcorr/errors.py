"""Exception hierarchy shared by all textcorr modules."""


class TextcorrError(Exception):
    """Base class for recoverable textcorr failures."""


class ParseError(TextcorrError, ValueError):
    """Malformed input file or string.

    ``line`` is 1-based when known.
    """

    def __init__(self, message, line=None, source=None):
        self.line = line
        self.source = source
        where = ""
        if source is not None:
            where += str(source)
        if line is not None:
            where += f":{line}" if where else f"line {line}"
        super().__init__(f"{where}: {message}" if where else message)


class ConfigError(TextcorrError):
    """Invalid combination of options or missing resource."""


class AlignmentError(TextcorrError):
    """Texts that must be token-aligned are not."""

    def __init__(self, message, line=None):
        self.line = line
        super().__init__(message)


class InconsistencyError(TextcorrError):
    """A normalization record does not match the document it is applied to."""
